"""Model roster and encoder construction.

Every entry records its learning-objective family (joint vs coordinated
representations), pre-training data domain, supported probe modalities,
and the pooling used to get one vector per stimulus. Checkpoints for
research-repo models (marked ``loader="external"``) are not bundled;
their entries document where the weights live and what the adapter
would pool. The two ``builtin`` encoders run anywhere with no weights
and exist to exercise the pipeline.
"""

from __future__ import annotations

from dataclasses import dataclass

from .encoders import SeededJointEncoder, SeededProjectionEncoder
from .errors import CheckpointUnavailableError, UnknownModelError, UnsupportedModalityError


@dataclass(frozen=True)
class ModelInfo:
    model_id: str
    representation: str          # joint | coordinated | joint+coordinated
    data_domain: str
    modalities: tuple[str, ...]
    pooling: str
    checkpoint: str | None
    loader: str                  # builtin | transformers | external

    @property
    def meta(self) -> dict[str, str]:
        return {
            "representation": self.representation,
            "dataDomain": self.data_domain,
            "pooling": self.pooling,
            "checkpoint": self.checkpoint or "",
        }


_REGISTRY: tuple[ModelInfo, ...] = (
    ModelInfo(
        "speechclip", "coordinated", "spoken-captions", ("audio", "image", "text"),
        "retrieval CLS embedding of the parallel branch",
        "atosystem/SpeechCLIP parallel base (Flickr/SpokenCOCO)", "external",
    ),
    ModelInfo(
        "fast-vgs", "coordinated", "spoken-captions", ("audio", "image"),
        "retrieval head output",
        "jasonppy/FaST-VGS-Family (coco_base)", "external",
    ),
    ModelInfo(
        "av-hubert", "joint", "audio-visual-speech", ("audio", "image"),
        "mean-pooled final encoder layer, absent modality zero-filled",
        "facebookresearch/av_hubert (base_lrs3_vox)", "external",
    ),
    ModelInfo(
        "cav-mae", "joint+coordinated", "audio-events", ("audio", "image"),
        "mean-pooled encoder outputs, absent modality zero-filled",
        "yuangongnd/cav-mae (cav-mae-scale++)", "external",
    ),
    ModelInfo(
        "mavil", "joint+coordinated", "audio-events", ("audio", "image"),
        "mean-pooled encoder outputs, absent modality zero-filled",
        "facebookresearch/MAViL", "external",
    ),
    ModelInfo(
        "replai", "coordinated", "audio-events", ("audio", "image"),
        "projection-head output",
        "HimangiM/RepLAI (Ego4D)", "external",
    ),
    ModelInfo(
        "imagebind", "coordinated", "multimodal-bound-to-images", ("audio", "image", "text"),
        "modality head output",
        "facebookresearch/ImageBind (imagebind_huge)", "external",
    ),
    ModelInfo(
        "clip", "coordinated", "text-image", ("image", "text"),
        "projection-head embedding (get_image_features / get_text_features)",
        "openai/clip-vit-base-patch32", "transformers",
    ),
    ModelInfo(
        "blip", "coordinated", "text-image", ("image", "text"),
        "ITC projection embeddings (vision_proj / text_proj of the CLS state)",
        "Salesforce/blip-itm-base-coco", "transformers",
    ),
    ModelInfo(
        "toy-coordinated", "coordinated", "synthetic", ("image", "audio", "text"),
        "tanh of seeded Gaussian projection",
        None, "builtin",
    ),
    ModelInfo(
        "toy-joint", "joint", "synthetic", ("image", "audio"),
        "tanh of seeded Gaussian projection over concatenated modality "
        "features, absent modality zero-filled",
        None, "builtin",
    ),
)

_BY_ID = {info.model_id: info for info in _REGISTRY}


def list_models() -> list[ModelInfo]:
    """Static roster in fixed order."""
    return list(_REGISTRY)


def get_info(model_id: str) -> ModelInfo:
    try:
        return _BY_ID[model_id]
    except KeyError:
        known = ", ".join(sorted(_BY_ID))
        raise UnknownModelError(f"unknown model {model_id!r}; known: {known}") from None


def load_encoder(model_id: str, modality: str, device: str = "cpu"):
    """Construct the encoder behind a registry entry.

    Raises UnsupportedModalityError if the model cannot encode the
    modality, and CheckpointUnavailableError when weights cannot be
    loaded in this environment.
    """
    info = get_info(model_id)
    if modality not in info.modalities:
        raise UnsupportedModalityError(
            f"{model_id} encodes {'/'.join(info.modalities)}, not {modality!r}"
        )
    if info.loader == "builtin":
        if info.model_id == "toy-joint":
            return SeededJointEncoder(dim=64, seed=0)
        return SeededProjectionEncoder(dim=64, seed=0, modalities=info.modalities)
    if info.loader == "transformers":
        from . import hf_adapters

        if info.model_id == "clip":
            return hf_adapters.ClipEncoder(info.checkpoint, device=device)
        return hf_adapters.BlipItmEncoder(info.checkpoint, device=device)
    raise CheckpointUnavailableError(
        f"{model_id} weights live in an external research repo "
        f"({info.checkpoint}); wire them up manually before extraction"
    )
