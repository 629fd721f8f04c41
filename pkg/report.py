import json
from collections import Counter
from datetime import datetime

import pandas as pd

OUTCOMES = ('Holds', 'Violates', 'Inconclusive')
TAGS = ('chordal', 'coChordal', 'muAtMost7', 'muAtLeastNminus6')


class JsonlSink:
    """One JSON record per line, flushed per record. A None path discards records."""

    def __init__(self, path):
        self.path = path
        self._file = None

    def __enter__(self):
        if self.path is not None:
            try:
                self._file = open(self.path, 'w', encoding='utf-8')
            except OSError as e:
                raise OSError(f"cannot open report {self.path}: {e}") from e
        return self

    def write(self, record):
        if self._file is not None:
            self._file.write(json.dumps(record) + "\n")
            self._file.flush()

    def __exit__(self, *exc):
        if self._file is not None:
            self._file.close()
        return False


def summarize_records(records):
    """Counts per outcome and per class tag."""
    outcomes = Counter(r['outcome'] for r in records)
    tags = Counter(tag for r in records for tag in r['tags'])
    return {
        'graphs': len(records),
        'outcomes': {o: outcomes.get(o, 0) for o in OUTCOMES},
        'tags': {t: tags.get(t, 0) for t in TAGS},
    }


def read_report(path):
    """Load a JSONL report into a DataFrame (empty frame for an empty file)."""
    with open(path, 'r', encoding='utf-8') as f:
        if not f.read(1):
            return pd.DataFrame(columns=['canon', 'n', 'm', 'lo', 'hi', 'outcome', 'tags',
                                         'rulesFired', 'elapsedMicros'])
    return pd.read_json(path, lines=True, dtype={'canon': str})


def summarize_frame(frame):
    """Same summary as summarize_records, from a loaded report."""
    return summarize_records(frame[['outcome', 'tags']].to_dict('records'))


class ReportOutput:
    def __init__(self, output_format='text'):
        self.output_format = output_format  # 'text', 'json', 'csv'

    def generate_report(self, summary, additional_info=None):
        """Render a campaign summary."""
        data = dict(summary)
        data.setdefault('timestamp', datetime.now().isoformat())
        if additional_info:
            data['additional_info'] = additional_info

        if self.output_format == 'json':
            return json.dumps(data, indent=4)
        elif self.output_format == 'csv':
            return self._to_csv(data)
        else:
            return self._to_text(data)

    def _to_text(self, data):
        outcomes = data['outcomes']
        held = ", ".join(f"{outcomes[o]} {o}" for o in OUTCOMES if outcomes[o] or o == 'Holds')
        report = f"{data['graphs']} graphs, {held}\n"
        tagged = ", ".join(f"{tag}: {count}" for tag, count in data['tags'].items() if count)
        if tagged:
            report += f"tags: {tagged}\n"
        if 'runtime_seconds' in data:
            report += f"runtime: {data['runtime_seconds']:.2f}s\n"
        if data.get('additional_info'):
            report += f"{data['additional_info']}\n"
        return report

    def _to_csv(self, data):
        lines = ["key,value", f"graphs,{data['graphs']}"]
        lines += [f"{o},{data['outcomes'][o]}" for o in OUTCOMES]
        lines += [f"{t},{c}" for t, c in data['tags'].items()]
        return "\n".join(lines)
