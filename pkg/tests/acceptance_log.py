"""Shared record of acceptance verdicts, one line per criterion."""

VERDICTS: list[str] = []
