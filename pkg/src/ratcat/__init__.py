"""Exact q,t-combinatorics of rational Dyck paths and parking functions."""

__version__ = "0.1.0"
