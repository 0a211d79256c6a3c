"""Command line surface; each module holds one family of subcommands."""
