from dqslab.cli_io.cli import main

main()
