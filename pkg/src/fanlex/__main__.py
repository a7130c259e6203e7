from fanlex.cli import entry

entry()
