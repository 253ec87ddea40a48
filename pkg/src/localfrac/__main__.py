from localfrac.cli import main

main()
