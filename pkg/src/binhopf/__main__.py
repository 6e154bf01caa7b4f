from binhopf.cli import main

main()
