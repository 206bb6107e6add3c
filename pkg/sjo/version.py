#
#   SJO version: Automatically generated version file
#

__version__ = "0.1.0a"
