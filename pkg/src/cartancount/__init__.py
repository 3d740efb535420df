"""
[CC-A000] cartancount - Cartan 부분대수 분류 엔진
차원 강하 대수 I_{m,n,o}의 비퇴화 Cartan 부분대수 공액류를
행/열 합이 고정된 행렬의 합동류로 열거하고 셉니다.

version: 0.1.0
created: 2026-10-17
modified: 2026-10-17
"""

__version__ = "0.1.0"
