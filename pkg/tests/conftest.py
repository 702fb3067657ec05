import sys, os

sys.path.insert(0, os.path.abspath("."))
