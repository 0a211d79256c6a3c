"""Value types (schemas) and formula-carrying domain types (domain)."""
