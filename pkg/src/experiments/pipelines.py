"""
Experiment pipelines.

Each experiment tag maps to a pipeline class that lists the modes it runs per
instance (evaluator tag, backend, layer count). The runner executes every
instance through those modes, one ResultRow per trial, and hands the rows to a
single CSV writer in the parent process.

Experiments:
  lcc-vs-full-noisy   noisy LCC on the small device vs noisy full circuit on the large one
  same-device-noisy   noisy LCC vs noisy full circuit on one device
  layer-study         noiseless LCC for each layer count
  gw-comparison       noiseless LCC vs Goemans-Williamson hyperplane rounding
  equivalence-check   LCC vs full-state expectation on random angles (no instances)
"""
import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Set, Tuple, Type

from ..ansatz import AnsatzSpec, Entanglement
from ..classical import GwResult, gw_embed, gw_round
from ..config_loader import data_dir
from ..config_schemas import ExperimentConfig
from ..evaluators import Evaluator, make_evaluator
from ..logging_config import get_logger
from ..noise import BackendSpec, NoisySimConfig, load_backend
from ..optimizers import OptimizerConfig
from ..problems import MaxCutInstance, max_cut_bruteforce
from ..seeding import derive_seed
from ..vqe import layer_percentages, vqe_run
from .results import (
    FAILED_TRIAL,
    STATUS_OK,
    ResultRow,
    ResultsWriter,
    RunKey,
    StepResult,
    read_results,
    write_best,
)

logger = get_logger(__name__)

GW_MODE = "gw"
NO_BACKEND = "none"

OPTIMUM_BRUTEFORCE = "bruteforce"
OPTIMUM_GW_BEST = "gw-best"
OPTIMUM_SDP_BOUND = "sdp-bound"


@dataclass(frozen=True)
class ModeSpec:
    tag: str
    backend: str = NO_BACKEND
    layers: int = 1

    def key(self, g: MaxCutInstance) -> RunKey:
        return (g.instance_id, self.tag, self.backend, self.layers)


@dataclass(frozen=True)
class Optimum:
    value: float
    source: str
    gw: Optional[GwResult] = None
    relaxation_value: Optional[float] = None


@dataclass
class RunSummary:
    experiment: str
    trials_path: Path
    best_path: Optional[Path]
    rows_written: int
    failures: int
    skipped: int
    percentages: Dict[int, float] = field(default_factory=dict)


def output_dir(cfg: ExperimentConfig) -> Path:
    if cfg.out:
        return Path(cfg.out)
    return data_dir() / "results" / f"{cfg.experiment}.{cfg.scale}"


def optimizer_config(cfg: ExperimentConfig) -> OptimizerConfig:
    o = cfg.optimizer
    return OptimizerConfig(method=o.method, max_evals=o.max_evals,
                           initial_step=o.initial_step, tolerance=o.tolerance)


def run_gw(g: MaxCutInstance, cfg: ExperimentConfig) -> Tuple[GwResult, float]:
    """Best-of-trials GW rounding and the relaxation value."""
    root = derive_seed(cfg.seed, g.instance_id, "gw")
    emb = gw_embed(g, derive_seed(root, "embed"), cfg.gw.max_iters, cfg.gw.tolerance)
    return gw_round(emb, g, cfg.gw.trials, derive_seed(root, "round")), emb.value


def resolve_optimum(g: MaxCutInstance, cfg: ExperimentConfig, need_gw: bool = False) -> Optimum:
    """
    AR denominator: brute force up to ``optimum.bruteforce_cap`` vertices,
    otherwise the GW best cut or the relaxation value.
    """
    gw, relaxation = None, None
    if need_gw or g.n > cfg.optimum.bruteforce_cap:
        gw, relaxation = run_gw(g, cfg)
    if g.n <= cfg.optimum.bruteforce_cap:
        value, _ = max_cut_bruteforce(g, cfg.optimum.bruteforce_cap)
        return Optimum(float(value), OPTIMUM_BRUTEFORCE, gw, relaxation)
    if cfg.optimum.fallback == OPTIMUM_SDP_BOUND:
        return Optimum(float(relaxation), OPTIMUM_SDP_BOUND, gw, relaxation)
    return Optimum(float(gw.best_cut), OPTIMUM_GW_BEST, gw, relaxation)


class ExperimentPipeline:
    """Runs every instance of the dataset through the modes of one experiment."""

    experiment = "base"
    needs_gw = False

    def __init__(self, cfg: ExperimentConfig):
        self.cfg = cfg
        self._backends: Dict[str, BackendSpec] = {}

    def modes(self) -> List[ModeSpec]:
        raise NotImplementedError

    def backend(self, name: str) -> BackendSpec:
        if name not in self._backends:
            self._backends[name] = load_backend(name)
        return self._backends[name]

    def _base_row(self, g: MaxCutInstance, mode: ModeSpec, trial: int, trial_seed: Optional[int]) -> ResultRow:
        return ResultRow(
            experiment=self.cfg.experiment,
            instance_id=g.instance_id,
            n=g.n,
            num_edges=g.num_edges,
            kind=g.meta.kind,
            p=g.meta.p,
            d=g.meta.d,
            seed=g.meta.seed,
            mode=mode.tag,
            backend=mode.backend,
            layers=mode.layers,
            entanglement=self.cfg.ansatz.entanglement,
            trial=trial,
            trial_seed=trial_seed,
        )

    def _evaluator_factory(self, g: MaxCutInstance, mode: ModeSpec):
        spec = AnsatzSpec(n=g.n, layers=mode.layers, entanglement=Entanglement(self.cfg.ansatz.entanglement))
        noise = self.cfg.noise
        backend = self.backend(mode.backend) if mode.backend != NO_BACKEND else None

        def make(trial_seed: int) -> Evaluator:
            sim = NoisySimConfig(trajectories=noise.trajectories, shots=noise.shots,
                                 seed=derive_seed(trial_seed, "noise"), placement=noise.placement)
            return make_evaluator(mode.tag, g, spec, backend, sim, noise.common_random_numbers)

        return make

    def _vqe_rows(self, g: MaxCutInstance, mode: ModeSpec, optimum: Optimum) -> List[ResultRow]:
        make = self._evaluator_factory(g, mode)
        # Routing and width columns come from a probe evaluator
        probe = make(0)
        run = vqe_run(g, make, optimizer_config(self.cfg), self.cfg.trials,
                      derive_seed(self.cfg.seed, self.cfg.experiment), optimum.value or None, self.cfg.shots)
        rows = []
        for t in run.trials:
            row = self._base_row(g, mode, t.trial, t.seed)
            row.ar = t.ar
            row.expectation = t.expectation
            row.best_sampled_cut = t.best_sampled_cut
            row.evals = t.evals_used
            row.budget_exhausted = t.budget_exhausted
            row.wall_time = t.wall_time
            row.routing = probe.routing
            row.max_subcircuit_qubits = probe.max_subcircuit_qubits
            rows.append(row)
        exhausted = sum(1 for t in run.trials if t.budget_exhausted)
        if exhausted:
            logger.warning(f"{exhausted} of {len(run.trials)} trials stopped at the evaluation budget",
                           extra={"instance_id": g.instance_id, "mode": mode.tag, "backend": mode.backend})
        return rows

    def _gw_rows(self, g: MaxCutInstance, mode: ModeSpec, optimum: Optimum) -> List[ResultRow]:
        started = time.perf_counter()
        gw = optimum.gw or run_gw(g, self.cfg)[0]
        elapsed = time.perf_counter() - started
        rows = []
        for t, cut in enumerate(gw.cuts):
            row = self._base_row(g, mode, t, None)
            row.expectation = float(cut)
            row.ar = cut / optimum.value if optimum.value else None
            row.best_sampled_cut = cut
            row.wall_time = elapsed
            rows.append(row)
        return rows

    def run_mode(self, g: MaxCutInstance, mode: ModeSpec, optimum: Optimum) -> StepResult[List[ResultRow]]:
        try:
            if mode.tag == GW_MODE:
                rows = self._gw_rows(g, mode, optimum)
            else:
                rows = self._vqe_rows(g, mode, optimum)
        except Exception as e:
            logger.error(f"{mode.tag} on {g.instance_id} failed: {e}",
                         extra={"experiment": self.cfg.experiment, "instance_id": g.instance_id,
                                "mode": mode.tag, "backend": mode.backend})
            return StepResult.from_exception(e)
        for row in rows:
            row.optimum = optimum.value
            row.optimum_source = optimum.source
            row.gw_best_cut = optimum.gw.best_cut if optimum.gw else None
            row.relaxation_value = optimum.relaxation_value
        return StepResult.ok(rows)

    def run_instance(self, g: MaxCutInstance, done: Set[RunKey]) -> List[ResultRow]:
        """All pending modes of one instance; failures become single status rows."""
        pending = [m for m in self.modes() if m.key(g) not in done]
        if not pending:
            return []
        logger.info(f"Running {g.instance_id} ({len(pending)} modes)",
                    extra={"experiment": self.cfg.experiment, "instance_id": g.instance_id})
        try:
            optimum = resolve_optimum(g, self.cfg, self.needs_gw)
        except Exception as e:
            logger.error(f"Optimum for {g.instance_id} failed: {e}",
                         extra={"experiment": self.cfg.experiment, "instance_id": g.instance_id})
            failure = StepResult.from_exception(e)
            return [self._failed_row(g, m, failure.error) for m in pending]

        rows: List[ResultRow] = []
        for mode in pending:
            result = self.run_mode(g, mode, optimum)
            rows.extend(result.data if result.success else [self._failed_row(g, mode, result.error)])
        return rows

    def _failed_row(self, g: MaxCutInstance, mode: ModeSpec, status: str) -> ResultRow:
        row = self._base_row(g, mode, FAILED_TRIAL, None)
        row.status = status
        return row

    def run(self, instances: Iterable[MaxCutInstance], out: Optional[Path] = None) -> RunSummary:
        """
        Execute the experiment, resuming from an existing trials file.

        Rows are flushed after every instance so an interrupted run can be
        restarted with the same config.
        """
        out = Path(out) if out else output_dir(self.cfg)
        trials_path = out / "trials.csv"
        instances = list(instances)
        failures = 0
        with ResultsWriter(trials_path, self.cfg) as writer:
            done = set(writer.done)
            todo = [g for g in instances if any(m.key(g) not in done for m in self.modes())]
            skipped = len(instances) - len(todo)
            if skipped:
                logger.info(f"Resuming: {skipped} instances already complete",
                            extra={"experiment": self.cfg.experiment})
            for rows in self._map(todo, done):
                failures += sum(1 for r in rows if r.status != STATUS_OK)
                writer.write_rows(rows)
            written = writer.rows_written
        best_path = out / "best.csv"
        write_best(trials_path, best_path, self.cfg)
        logger.info(f"Finished {self.cfg.experiment}: {written} rows, {failures} failures",
                    extra={"experiment": self.cfg.experiment})
        return RunSummary(self.cfg.experiment, trials_path, best_path, written, failures, skipped)

    def _map(self, todo: List[MaxCutInstance], done: Set[RunKey]) -> Iterable[List[ResultRow]]:
        if self.cfg.workers <= 1 or len(todo) <= 1:
            for g in todo:
                yield self.run_instance(g, done)
            return
        jobs = [(self.cfg, g, done) for g in todo]
        with Pool(min(self.cfg.workers, len(todo))) as pool:
            yield from pool.imap(_run_job, jobs)


def _run_job(job: Tuple[ExperimentConfig, MaxCutInstance, Set[RunKey]]) -> List[ResultRow]:
    cfg, g, done = job
    return get_pipeline(cfg).run_instance(g, done)


class LccVsFullNoisyPipeline(ExperimentPipeline):
    experiment = "lcc-vs-full-noisy"

    def modes(self) -> List[ModeSpec]:
        noise = self.cfg.noise
        layers = self.cfg.ansatz.layers
        return [
            ModeSpec("noisy-lcc", noise.backend, layers),
            ModeSpec("noisy-full", noise.full_backend or noise.backend, layers),
        ]


class SameDeviceNoisyPipeline(ExperimentPipeline):
    experiment = "same-device-noisy"

    def modes(self) -> List[ModeSpec]:
        backend = self.cfg.noise.backend
        layers = self.cfg.ansatz.layers
        return [ModeSpec("noisy-lcc", backend, layers), ModeSpec("noisy-full", backend, layers)]


class LayerStudyPipeline(ExperimentPipeline):
    experiment = "layer-study"

    def modes(self) -> List[ModeSpec]:
        return [ModeSpec("noiseless-lcc", NO_BACKEND, layers) for layers in self.cfg.layers]

    def run(self, instances: Iterable[MaxCutInstance], out: Optional[Path] = None) -> RunSummary:
        """Run every layer count, then report the share of trials at or above the AR threshold."""
        summary = super().run(instances, out)
        trials = read_results(summary.trials_path)
        ok = trials[(trials["status"] == STATUS_OK) & trials["ar"].notna()]
        by_layer = {int(layers): group["ar"].tolist() for layers, group in ok.groupby("layers")}
        summary.percentages = layer_percentages(by_layer, self.cfg.threshold)
        for layers, pct in sorted(summary.percentages.items()):
            logger.info(f"Layers {layers}: {pct:.1f}% of trials reach AR >= {self.cfg.threshold:g}",
                        extra={"experiment": self.experiment})
        return summary


class GwComparisonPipeline(ExperimentPipeline):
    experiment = "gw-comparison"
    needs_gw = True

    def modes(self) -> List[ModeSpec]:
        return [ModeSpec("noiseless-lcc", NO_BACKEND, self.cfg.ansatz.layers), ModeSpec(GW_MODE)]


class EquivalenceCheckPipeline(ExperimentPipeline):
    """Has no instance modes; ``run_experiment`` dispatches it to the equivalence check."""

    experiment = "equivalence-check"

    def modes(self) -> List[ModeSpec]:
        return []


PIPELINE_CLASSES: Dict[str, Type[ExperimentPipeline]] = {
    "lcc-vs-full-noisy": LccVsFullNoisyPipeline,
    "same-device-noisy": SameDeviceNoisyPipeline,
    "layer-study": LayerStudyPipeline,
    "gw-comparison": GwComparisonPipeline,
    "equivalence-check": EquivalenceCheckPipeline,
}


def get_pipeline(cfg: ExperimentConfig) -> ExperimentPipeline:
    return PIPELINE_CLASSES[cfg.experiment](cfg)
