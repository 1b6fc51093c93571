from pydantic import BaseModel, Field, field_validator, model_validator
from typing import Dict, List, Literal, Optional

Probability = Field(ge=0.0, le=1.0)

EXPERIMENT_TAGS = (
    "lcc-vs-full-noisy",
    "same-device-noisy",
    "layer-study",
    "gw-comparison",
    "equivalence-check",
)


# =============================================================================
# Backend device tables
# =============================================================================

class QubitProperties(BaseModel):
    frequency_ghz: float
    t1_us: float = Field(gt=0)
    t2_us: float = Field(gt=0)
    readout_error: float = Probability
    sq_error: float = Probability


class CouplingProperties(BaseModel):
    pair: List[int] = Field(min_length=2, max_length=2)
    cnot_error: float = Probability

    @field_validator("pair")
    @classmethod
    def _distinct(cls, v: List[int]) -> List[int]:
        if v[0] == v[1]:
            raise ValueError(f"coupling joins qubit {v[0]} to itself")
        return v


class BackendFile(BaseModel):
    name: str
    description: Optional[str] = None
    n_qubits: int = Field(ge=1)
    qubits: Dict[int, QubitProperties]
    couplings: List[CouplingProperties] = Field(default_factory=list)

    @model_validator(mode="after")
    def _covers_device(self) -> "BackendFile":
        expected = set(range(self.n_qubits))
        if set(self.qubits) != expected:
            missing = sorted(expected - set(self.qubits))
            extra = sorted(set(self.qubits) - expected)
            raise ValueError(f"qubit table must list 0..{self.n_qubits - 1} (missing {missing}, extra {extra})")
        seen = set()
        for c in self.couplings:
            a, b = sorted(c.pair)
            if b >= self.n_qubits:
                raise ValueError(f"coupling {c.pair} references a qubit outside the device")
            if (a, b) in seen:
                raise ValueError(f"coupling {c.pair} listed twice")
            seen.add((a, b))
        return self


# =============================================================================
# Dataset tables
# =============================================================================

class InstanceSpec(BaseModel):
    kind: Literal["gnp", "regular"]
    n: int = Field(ge=1)
    p: Optional[float] = Field(default=None, ge=0.0, le=1.0)
    d: Optional[int] = Field(default=None, ge=0)
    seeds: List[int] = Field(min_length=1)

    @model_validator(mode="after")
    def _has_parameter(self) -> "InstanceSpec":
        if self.kind == "gnp" and self.p is None:
            raise ValueError("gnp rows need p")
        if self.kind == "regular" and self.d is None:
            raise ValueError("regular rows need d")
        return self


class DatasetTable(BaseModel):
    description: Optional[str] = None
    rows: List[InstanceSpec]


class DatasetsFile(BaseModel):
    tables: Dict[str, DatasetTable] = Field(default_factory=dict)


# =============================================================================
# Experiment configs
# =============================================================================

class DatasetSettings(BaseModel):
    table: Optional[str] = None
    instances: List[InstanceSpec] = Field(default_factory=list)
    paths: List[str] = Field(default_factory=list)
    n_min: Optional[int] = None
    n_max: Optional[int] = None
    limit: Optional[int] = Field(default=None, ge=1)


class AnsatzSettings(BaseModel):
    layers: int = Field(default=1, ge=1)
    entanglement: Literal["circular", "linear", "full"] = "circular"


class OptimizerSettings(BaseModel):
    method: str = "cobyla"
    max_evals: Optional[int] = Field(default=None, ge=1)
    initial_step: float = Field(default=0.5, gt=0)
    tolerance: float = Field(default=1e-4, gt=0)


class NoiseSettings(BaseModel):
    backend: str = "backend27"
    # Backend for the full-circuit mode when it differs from the LCC one
    full_backend: Optional[str] = None
    trajectories: int = Field(default=256, ge=1)
    shots: int = Field(default=1024, ge=1)
    placement: Literal["first-path", "lowest-error"] = "first-path"
    common_random_numbers: bool = True


class GwSettings(BaseModel):
    trials: int = Field(default=24, ge=1)
    max_iters: int = Field(default=5000, ge=1)
    tolerance: float = Field(default=1e-6, gt=0)


class OptimumSettings(BaseModel):
    bruteforce_cap: int = Field(default=22, ge=1, le=26)
    fallback: Literal["gw-best", "sdp-bound"] = "gw-best"


class EquivalenceSettings(BaseModel):
    n_min: int = Field(default=4, ge=3)
    n_max: int = Field(default=12, ge=3)
    layers: List[int] = Field(default_factory=lambda: [1, 2, 3])
    entanglements: List[Literal["circular", "linear"]] = Field(default_factory=lambda: ["circular", "linear"])
    draws: int = Field(default=100, ge=1)
    edge_probability: float = Field(default=0.5, ge=0.0, le=1.0)
    tolerance: float = Field(default=1e-9, gt=0)


class ExperimentConfig(BaseModel):
    experiment: Literal[
        "lcc-vs-full-noisy",
        "same-device-noisy",
        "layer-study",
        "gw-comparison",
        "equivalence-check",
    ]
    scale: str = "desk"
    seed: int = 0
    trials: int = Field(default=24, ge=1)
    workers: int = Field(default=1, ge=1)
    shots: int = Field(default=1024, ge=1)
    out: Optional[str] = None
    dataset: DatasetSettings = Field(default_factory=DatasetSettings)
    ansatz: AnsatzSettings = Field(default_factory=AnsatzSettings)
    optimizer: OptimizerSettings = Field(default_factory=OptimizerSettings)
    noise: NoiseSettings = Field(default_factory=NoiseSettings)
    gw: GwSettings = Field(default_factory=GwSettings)
    optimum: OptimumSettings = Field(default_factory=OptimumSettings)
    # layer-study
    layers: List[int] = Field(default_factory=lambda: [1, 2, 3, 4])
    threshold: float = 0.99
    equivalence: EquivalenceSettings = Field(default_factory=EquivalenceSettings)
