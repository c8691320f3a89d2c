from app.cli.commands import conjecture, mine, plotdata, poly, search, table, verify

COMMANDS = [poly, search, table, plotdata, verify, conjecture, mine]

__all__ = ["COMMANDS"]
