from crr.cli import main

main()
