# qformlab tests
