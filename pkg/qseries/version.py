VERSION = '0.1.0'
VENDOR = 'qseries'
