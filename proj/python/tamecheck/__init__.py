from ._tamecheck import analyze, analyze_text, examples, parse_check, verify

__all__ = ["analyze", "analyze_text", "examples", "parse_check", "verify"]
