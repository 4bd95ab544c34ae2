"""Command-line plumbing: input loading, subcommand handlers, the characteristic sweep and report rendering."""
