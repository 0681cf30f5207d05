"""PyENM tests."""
