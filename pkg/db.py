import json
import logging
from dataclasses import asdict

from sqlalchemy import create_engine
from sqlalchemy.orm import sessionmaker

from models import Base, CampaignRun, VerdictRecord
from config import RESULTS_DB_URL

logger = logging.getLogger(__name__)


def init_database(url=RESULTS_DB_URL):
    engine = create_engine(url)
    Base.metadata.create_all(engine)
    return engine


def get_session(url=RESULTS_DB_URL):
    return sessionmaker(bind=init_database(url))()


def save_campaign(session, report, config=None):
    """Store a campaign report and its verdict records; returns the run id."""
    outcomes = report.summary.get('outcomes', {})
    run = CampaignRun(
        source=report.source,
        graphs=len(report.records),
        holds=outcomes.get('Holds', 0),
        violates=outcomes.get('Violates', 0),
        inconclusive=outcomes.get('Inconclusive', 0),
        runtime_seconds=report.summary.get('runtime_seconds'),
        config_json=json.dumps(asdict(config)) if config is not None else None,
    )
    try:
        session.add(run)
        session.flush()
        session.bulk_save_objects([
            VerdictRecord(
                run_id=run.id,
                canon=r['canon'],
                n=r['n'],
                m=r['m'],
                lo=r['lo'],
                hi=r['hi'],
                outcome=r['outcome'],
                tags=",".join(r['tags']),
                rules_fired=",".join(r['rulesFired']),
                elapsed_micros=r['elapsedMicros'],
            )
            for r in report.records
        ])
        session.commit()
    except Exception:
        session.rollback()
        logger.exception("could not save campaign %s", report.source)
        raise
    return run.id


def get_campaign(session, run_id):
    run = session.get(CampaignRun, run_id)
    if run is None:
        return None, []
    verdicts = session.query(VerdictRecord).filter_by(run_id=run_id).order_by(VerdictRecord.id).all()
    return run, verdicts


def list_campaigns(session):
    return session.query(CampaignRun).order_by(CampaignRun.created_at.desc()).all()
