# Exact arithmetic helpers, file formats and caching
