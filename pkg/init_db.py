#!/usr/bin/env python3
"""
Initialize the campaign results database with all required tables
"""

import sys

from db import init_database, get_session
from models import CampaignRun, VerdictRecord
from config import RESULTS_DB_URL


def initialize_db(url=RESULTS_DB_URL):
    """Create the tables and report how many runs are already stored."""
    print(f"Initializing results database at {url}...")
    init_database(url)

    session = get_session(url)
    try:
        runs = session.query(CampaignRun).count()
        verdicts = session.query(VerdictRecord).count()
        print("Database initialized successfully!")
        print(f"- campaign_runs table: OK ({runs} runs)")
        print(f"- verdicts table: OK ({verdicts} verdicts)")
        return runs
    except Exception as e:
        print(f"Error verifying database: {e}")
        return None
    finally:
        session.close()


if __name__ == "__main__":
    initialize_db(sys.argv[1] if len(sys.argv) > 1 else RESULTS_DB_URL)
