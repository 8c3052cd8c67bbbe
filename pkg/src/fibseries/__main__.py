from fibseries.cli import main

main()
