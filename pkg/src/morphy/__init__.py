# -*- coding: utf-8 -*-
"""German morphology system and statistical part-of-speech tagger.

Library layout:

- :mod:`morphy.tags` — the two tag sets and their mapping
- :mod:`morphy.lexicon` — root lexicon storage and lookup
- :mod:`morphy.inflection` — paradigm-driven form generation
- :mod:`morphy.analysis` — word-form analysis, compounds, unknown words
- :mod:`morphy.dialogue` — question-driven lexicon classification
- :mod:`morphy.tagger` — trigram and variable-context disambiguation
- :mod:`morphy.corpus`, :mod:`morphy.evaluation` — corpora and experiments
- :mod:`morphy.cli`, :mod:`morphy.service` — command line and HTTP front ends
"""

__version__ = "0.1.0"
