# Dual key variety workbench application
