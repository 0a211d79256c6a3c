from aggparadox.safety.classifier import classify, construct_paradox
from aggparadox.safety.report import build_report, explain, format_table

__all__ = ["build_report", "classify", "construct_paradox", "explain", "format_table"]
