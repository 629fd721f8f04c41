# Configuration settings for the Colin de Verdiere verification lab
import logging
import os

from dotenv import load_dotenv

# Load environment variables from .env file
load_dotenv()

# Graph capacity
MAX_VERTICES = 64  # adjacency rows are single-word bitsets
CANONICAL_MAX_VERTICES = 10
ENUMERATION_MAX_N = 8
PATTERN_MAX_VERTICES = 10
MINOR_HOST_MAX_VERTICES = 16

# Minor search
MINOR_BUDGET = int(os.getenv('MU_MINOR_BUDGET', 10**7))  # expanded search nodes

# Engine
DELETION_DEPTH = int(os.getenv('MU_DELETION_DEPTH', 1))
EDGELESS_CONVENTION = os.getenv('MU_EDGELESS_CONVENTION', 'paper')  # 'paper' or 'matrix'

# Rules, cheapest first
DEFAULT_RULES = [
    'R1',   # components
    'R2',   # complete graphs
    'R3',   # universal-vertex peel
    'R4',   # characterization ladder
    'R6',   # edge-count upper bound
    'R7',   # chordal exact value
    'R8',   # co-chordal lower bound
    'R10',  # sparse complement lower bound
    'R9',   # small-complement lower bound
    'R12',  # supplied certificates
    'R5',   # Hadwiger number lower bound
    'R11',  # vertex deletion
]

# Rules that are only run while the interval is still open
EXPENSIVE_RULES = ['R5', 'R11']

RULE_DESCRIPTIONS = {
    'R1': 'maximum over connected components',
    'R2': 'complete graph K_t has mu = t-1',
    'R3': 'universal vertex peel mu(G) = mu(G-v)+1',
    'R4': 'characterization ladder (linear forest / outerplanar / planar / linkless)',
    'R5': 'Hadwiger number lower bound mu >= h-1',
    'R6': 'edge-count upper bound |E| >= C(mu+1,2)',
    'R7': 'chordal exact value',
    'R8': 'chordal complement sum bound',
    'R9': 'complement with mu <= 3 sum bound',
    'R10': 'complement without cycle or P32 subgraph',
    'R11': 'vertex deletion mu(G) <= mu(G-v)+1',
    'R12': 'verified certificate corank',
}

# Certificates
CERT_SEARCH_MAX_VERTICES = 20
CERT_DENOMINATOR_CAP = 10**6
CERT_SEARCH_BUDGET = 200  # optimizer restarts
CERT_SEARCH_SEED = 7
CERT_FORMAT_VERSION = 1

# Campaigns
CAMPAIGN_DEFAULT_MAX_N = 7
CAMPAIGN_WORKERS = int(os.getenv('MU_CAMPAIGN_WORKERS', 1))
REPORT_FORMAT = 'text'  # 'text', 'json' or 'csv' summaries
RESULTS_DB_URL = os.getenv('MU_RESULTS_DB', 'sqlite:///campaign_results.db')

# Logging
LOG_LEVEL = os.getenv('MU_LOG_LEVEL', 'WARNING')
LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'


def configure_logging(level=None):
    """Configure the root logger once for CLI and script use."""
    logging.basicConfig(level=(level or LOG_LEVEL).upper(), format=LOG_FORMAT)
