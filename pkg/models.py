from datetime import datetime

from sqlalchemy import Column, Integer, String, Float, DateTime, Text, ForeignKey
from sqlalchemy.orm import declarative_base, relationship

Base = declarative_base()


class CampaignRun(Base):
    __tablename__ = 'campaign_runs'
    id = Column(Integer, primary_key=True)
    source = Column(String, nullable=False)
    graphs = Column(Integer, default=0)
    holds = Column(Integer, default=0)
    violates = Column(Integer, default=0)
    inconclusive = Column(Integer, default=0)
    runtime_seconds = Column(Float)
    config_json = Column(Text)  # engine configuration as JSON
    created_at = Column(DateTime, default=datetime.utcnow)

    verdicts = relationship("VerdictRecord", back_populates="run", cascade="all, delete-orphan")


class VerdictRecord(Base):
    __tablename__ = 'verdicts'
    id = Column(Integer, primary_key=True)
    run_id = Column(Integer, ForeignKey('campaign_runs.id'), nullable=False)
    canon = Column(String, nullable=False)
    n = Column(Integer, nullable=False)
    m = Column(Integer, nullable=False)
    lo = Column(Integer, nullable=False)
    hi = Column(Integer, nullable=False)
    outcome = Column(String, nullable=False)
    tags = Column(String)  # comma separated
    rules_fired = Column(String)  # comma separated
    elapsed_micros = Column(Integer)

    run = relationship("CampaignRun", back_populates="verdicts")
