"""
Runtime settings

Values come from the environment (optionally a local .env file) with safe
defaults, so CI jobs can tighten or relax the brute-force guards without code
changes.
"""

import os

from dotenv import load_dotenv

load_dotenv()

LOG_LEVEL = os.getenv("CLAWTREE_LOG_LEVEL", "INFO")

# Brute-force guards
ORACLE_WORK_LIMIT = int(os.getenv("CLAWTREE_ORACLE_WORK_LIMIT", str(2 ** 22)))
CORPUS_TREE_LIMIT = int(os.getenv("CLAWTREE_CORPUS_TREE_LIMIT", "100000"))
CORPUS_MAX_VERTICES = int(os.getenv("CLAWTREE_CORPUS_MAX_VERTICES", "12"))

# Solver behaviour
EXCHANGE_FALLBACK = os.getenv("CLAWTREE_EXCHANGE_FALLBACK", "false").lower() == "true"

AUDIT_JOBS = int(os.getenv("CLAWTREE_AUDIT_JOBS", "1"))
