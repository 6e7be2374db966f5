"""sakubun: Japanese composition analysis and unsupervised scoring.

An event-driven automata engine recognizes graded (JLPT N5..N1) grammar
patterns in tokenized text; feature extractors turn documents into word,
grammar, sentence and bag-of-words features; and a statistical scorer
grades a themed corpus without score labels. A CLI and a small HTTP
service expose batch analysis and live writing hints.
"""

from .automata import (
    Automaton,
    BudgetExceeded,
    ContextStore,
    MatchOutcome,
    Predicate,
    build_automaton,
    deserialize,
    feed_partial,
    match_at,
    register_hook,
    serialize,
)
from .tokenize import (
    ConjForm,
    Document,
    Lexicon,
    PosMajor,
    ScriptClass,
    Token,
    ingest_external,
    load_bundled_lexicon,
    split_sentences,
    tokenize,
    tokenize_document,
)
from .grammar import (
    GrammarPattern,
    Hint,
    MatchResult,
    Registry,
    compile_pattern,
    grammar_feature_report,
    hints,
    load_registry,
    load_bundled_registry,
    match_document,
)
from .features import (
    FeatureMatrix,
    assemble_matrix,
    bow,
    build_dictionary,
    grammar_features,
    sentence_features,
    word_features,
)
from .scoring import (
    GaussianModel,
    ScoreRange,
    ScoringParams,
    fit_gaussian,
    kmeans,
    map_score,
    normal_cdf,
    normalize,
    reduce_dim,
    score_corpus,
)

__version__ = "0.1.0"
