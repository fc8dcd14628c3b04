from hookpart.cli import main

main()
