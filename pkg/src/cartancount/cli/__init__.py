"""
[CC-H000] cartancount.cli
Typer 명령줄 인터페이스

version: 1.0.0
created: 2026-10-17
modified: 2026-10-17
"""
