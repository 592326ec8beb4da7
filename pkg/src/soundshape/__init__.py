"""File-driven toolkit for probing sound-shape associations in
multimodal embedding spaces: stimulus-space generation, an embedding
interchange format, semantic-direction projection scores, rank-based
discrimination metrics, and report emission.
"""

from .embedstore import (
    EmbeddingItem,
    EmbeddingSet,
    Finding,
    FindingCode,
    Modality,
    filter_set,
    read_csv_set,
    read_set,
    validate_set,
    write_set,
)
from .fixtures import FixtureSpec, synth_fixture
from .metrics import (
    EvalResult,
    evaluate,
    kendall_tau_b,
    permutation_p_value,
    roc_auc,
)
from .phonology import (
    GRAPHEME_MAP,
    Phone,
    PhoneKind,
    Pseudoword,
    ShapeClass,
    Syllable,
    enumerate_pseudowords,
    grapheme_form,
    inventory,
    validate_pseudoword,
)
from .probe import (
    ScoreRow,
    ScoreTable,
    ScoreType,
    SemanticDirection,
    class_mean_direction,
    cosine_score,
    geometric_scores,
    phonetic_scores,
)
from .report import (
    GroupKind,
    PhoneGroupProfile,
    phone_group_means,
    plot_series,
    profiles_csv,
    profiles_markdown,
    render_profiles_svg,
    summary_csv,
    summary_markdown,
    write_plot_series,
)
from .stimuli import (
    AudioStimulusSpec,
    DatasetManifest,
    ImagePromptSpec,
    audio_stimuli,
    build_manifest,
    default_speakers,
    image_prompts,
    read_manifest,
    write_manifest,
)

__version__ = "0.1.0"
