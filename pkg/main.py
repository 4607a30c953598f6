# main.py - Entry point for the oriented Steiner quasigroup toolkit
from oriented_steiner.cli import main

if __name__ == "__main__":
    main()
