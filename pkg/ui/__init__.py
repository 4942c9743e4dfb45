# Text rendering for the command line
