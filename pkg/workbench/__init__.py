# Command-line workbench: configuration, verification runner, history
