"""Unsupervised corpus grading and scoring.

Pipeline (one themed batch at a time): min-max normalize the quality
features, sum each document's normalized dimensions, fit a Gaussian to the
sums, and map a sum x into a score range [a, b) as a + (b - a) * P(X <= x).
Cluster mode first groups documents with k-means, orders the clusters by
mean feature sum to attach grade labels, and applies the same CDF mapping
inside each grade's score band. Digression detection projects bag-of-words
vectors to a low dimension and flags documents far from the corpus center;
flagged scores shrink toward the bottom of their band.

Everything is deterministic: randomness comes from one documented 64-bit
LCG so identical seeds reproduce identical reports anywhere.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np


class ScoringError(Exception):
    pass


class TooFewRows(ScoringError):
    pass


class TooFewValues(ScoringError):
    pass


class TooFewDocs(ScoringError):
    pass


class KTooLarge(ScoringError):
    pass


class LabelCountMismatch(ScoringError):
    pass


class ConvergenceFailure(ScoringError):
    def __init__(self, component: int):
        super().__init__(f"power iteration failed to converge on component {component}")
        self.component = component


class Lcg64:
    """64-bit linear congruential generator (MMIX multiplier/increment);
    doubles come from the top 53 bits. Small, boring, and reproducible
    across platforms, which is all k-means++ seeding needs."""

    MULT = 6364136223846793005
    INC = 1442695040888963407
    MASK = (1 << 64) - 1

    def __init__(self, seed: int):
        self.state = seed & self.MASK

    def next_u64(self) -> int:
        self.state = (self.state * self.MULT + self.INC) & self.MASK
        return self.state

    def random(self) -> float:
        return (self.next_u64() >> 11) / float(1 << 53)

    def randint(self, n: int) -> int:
        return min(int(self.random() * n), n - 1)


@dataclass(frozen=True)
class NormalizedMatrix:
    values: np.ndarray  # docs x retained dims, all in [0, 1]
    dropped_columns: tuple[int, ...]  # original indices with zero variance


@dataclass(frozen=True)
class GaussianModel:
    mu: float
    sigma: float  # sample std, n-1 denominator


@dataclass(frozen=True)
class ScoreRange:
    lo: float
    hi: float

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ScoringError(f"score range needs lo < hi, got [{self.lo}, {self.hi})")

    def midpoint(self) -> float:
        return (self.lo + self.hi) / 2.0


@dataclass(frozen=True)
class KMeansModel:
    k: int
    centroids: np.ndarray
    assignments: tuple[int, ...]
    iterations: int


DEFAULT_GRADE_RANGES = {
    "A": ScoreRange(90.0, 100.0),
    "B": ScoreRange(80.0, 90.0),
    "C": ScoreRange(70.0, 80.0),
    "D": ScoreRange(60.0, 70.0),
}


def normalize(matrix: np.ndarray) -> NormalizedMatrix:
    """Min-max scale each column to [0, 1]; constant columns are dropped
    and their original indices recorded."""
    matrix = np.asarray(matrix, dtype=np.float64)
    if matrix.ndim != 2 or matrix.shape[0] < 2:
        raise TooFewRows("normalization needs at least 2 rows")
    mins = matrix.min(axis=0)
    maxs = matrix.max(axis=0)
    keep = maxs > mins
    dropped = tuple(int(i) for i in np.flatnonzero(~keep))
    kept = matrix[:, keep]
    values = (kept - mins[keep]) / (maxs[keep] - mins[keep])
    return NormalizedMatrix(values=values, dropped_columns=dropped)


def feature_sum(row: np.ndarray) -> float:
    return float(np.asarray(row, dtype=np.float64).sum())


def feature_sums(nm: NormalizedMatrix) -> np.ndarray:
    return nm.values.sum(axis=1)


def fit_gaussian(values) -> GaussianModel:
    values = np.asarray(values, dtype=np.float64)
    if values.size < 2:
        raise TooFewValues("gaussian fit needs at least 2 values")
    mu = float(values.mean())
    sigma = float(math.sqrt(((values - mu) ** 2).sum() / (values.size - 1)))
    return GaussianModel(mu=mu, sigma=sigma)


def normal_cdf(x: float, m: GaussianModel) -> float:
    """P(X <= x) for X ~ N(mu, sigma^2); point-mass rule when sigma = 0."""
    if m.sigma == 0:
        if x < m.mu:
            return 0.0
        if x == m.mu:
            return 0.5
        return 1.0
    z = (x - m.mu) / (m.sigma * math.sqrt(2.0))
    return 0.5 * (1.0 + math.erf(z))


def map_score(x: float, m: GaussianModel, r: ScoreRange) -> float:
    return r.lo + (r.hi - r.lo) * normal_cdf(x, m)


def _sqdists(points: np.ndarray, centroid: np.ndarray) -> np.ndarray:
    diff = points - centroid
    return (diff * diff).sum(axis=1)


def kmeans(matrix, k: int, seed: int, max_iter: int = 100) -> KMeansModel:
    """Lloyd iterations over k-means++ seeds drawn from the documented LCG.

    Assignment ties break to the lowest cluster index; an emptied cluster is
    reseeded with the point farthest from its assigned centroid; the
    within-cluster squared distance is asserted non-increasing per
    iteration.
    """
    points = np.asarray(matrix.values if isinstance(matrix, NormalizedMatrix) else matrix,
                        dtype=np.float64)
    n = points.shape[0]
    if k > n:
        raise KTooLarge(f"k={k} exceeds {n} documents")
    if k < 2:
        raise ScoringError("k must be at least 2")

    rng = Lcg64(seed)
    centroids = [points[rng.randint(n)].copy()]
    while len(centroids) < k:
        d2 = np.min(np.stack([_sqdists(points, c) for c in centroids]), axis=0)
        total = float(d2.sum())
        if total <= 0.0:
            idx = rng.randint(n)
        else:
            r = rng.random() * total
            cum = 0.0
            idx = n - 1
            for i in range(n):
                cum += float(d2[i])
                if r < cum:
                    idx = i
                    break
        centroids.append(points[idx].copy())
    centroids = np.stack(centroids)

    assignments: list[int] | None = None
    iterations = 0
    previous_inertia = math.inf
    for _ in range(max_iter):
        iterations += 1
        dists = np.stack([_sqdists(points, centroids[j]) for j in range(k)], axis=1)
        new_assign = list(np.argmin(dists, axis=1))  # argmin takes the lowest index on ties
        for j in range(k):
            if j not in new_assign:
                # reseed with the point farthest from its (current) centroid
                assigned = np.array([float(_sqdists(points[i:i + 1],
                                                    centroids[new_assign[i]])[0])
                                     for i in range(n)])
                far = int(np.argmax(assigned))
                centroids[j] = points[far]
                new_assign[far] = j
        for j in range(k):
            members = points[[i for i in range(n) if new_assign[i] == j]]
            centroids[j] = members.mean(axis=0)
        inertia = float(sum(_sqdists(points[i:i + 1], centroids[new_assign[i]])[0]
                            for i in range(n)))
        assert inertia <= previous_inertia * (1.0 + 1e-12) + 1e-9, \
            "k-means objective increased"
        previous_inertia = inertia
        if new_assign == assignments:
            break
        assignments = new_assign
    return KMeansModel(k=k, centroids=centroids,
                       assignments=tuple(int(a) for a in assignments),
                       iterations=iterations)


def assign_grades(model: KMeansModel, sums, labels=("A", "B", "C", "D")):
    """Order clusters by descending mean member feature-sum (ties to the
    lower cluster index) and hand out labels in that order. Returns
    (per-document labels, label -> cluster index)."""
    labels = list(labels)
    if model.k != len(labels):
        raise LabelCountMismatch(f"{model.k} clusters but {len(labels)} labels")
    sums = np.asarray(sums, dtype=np.float64)
    means = []
    for j in range(model.k):
        member_sums = sums[[i for i, a in enumerate(model.assignments) if a == j]]
        means.append(float(member_sums.mean()))
    order = sorted(range(model.k), key=lambda j: (-means[j], j))
    cluster_to_label = {cluster: labels[rank] for rank, cluster in enumerate(order)}
    per_doc = [cluster_to_label[a] for a in model.assignments]
    return per_doc, {label: cluster for cluster, label in cluster_to_label.items()}


def grade_scores(sums, per_doc_labels, grade_ranges=None) -> list[float]:
    """Within each grade, fit a Gaussian to member sums and CDF-map into the
    grade's score band; a singleton grade falls back to the band midpoint."""
    grade_ranges = grade_ranges or DEFAULT_GRADE_RANGES
    sums = np.asarray(sums, dtype=np.float64)
    scores = [0.0] * len(per_doc_labels)
    for label in sorted(set(per_doc_labels)):
        rng = grade_ranges[label]
        member_idx = [i for i, lab in enumerate(per_doc_labels) if lab == label]
        if len(member_idx) == 1:
            scores[member_idx[0]] = rng.midpoint()
            continue
        model = fit_gaussian(sums[member_idx])
        for i in member_idx:
            scores[i] = map_score(float(sums[i]), model, rng)
    return scores


_ZERO_EIGEN = 1e-12


def reduce_dim(matrix: np.ndarray, d: int = 2, tol: float = 1e-9,
               max_iter: int = 1000) -> tuple[np.ndarray, np.ndarray]:
    """Project rows onto the top-d principal directions.

    Deterministic power iteration on the (unscaled) covariance with
    deflation; the start vector is the coordinate axis of the largest
    diagonal entry, and each converged component is sign-fixed so its
    largest-magnitude entry is positive. Returns (coords docs x d,
    components d x dims); exhausted variance yields zero components.
    """
    matrix = np.asarray(matrix, dtype=np.float64)
    n, w = matrix.shape
    if not 1 <= d <= n:
        raise ScoringError(f"target dims {d} must be in 1..{n}")
    centered = matrix - matrix.mean(axis=0)
    cov = centered.T @ centered
    components = np.zeros((d, w))
    for comp_index in range(d):
        j_star = int(np.argmax(np.diag(cov)))
        if cov[j_star, j_star] <= _ZERO_EIGEN:
            continue  # remaining variance is numerically zero
        v = np.zeros(w)
        v[j_star] = 1.0
        lam = None
        converged = False
        for _ in range(max_iter):
            nxt = cov @ v
            # keep strictly orthogonal to already-found components so
            # deflation residue can never be rediscovered
            for prev in range(comp_index):
                nxt = nxt - (nxt @ components[prev]) * components[prev]
            nrm = float(np.linalg.norm(nxt))
            if nrm <= _ZERO_EIGEN:
                v = np.zeros(w)
                lam = 0.0
                converged = True
                break
            v = nxt / nrm
            # convergence on the eigenvalue estimate: it stabilizes at twice
            # the exponential rate of the eigenvector and is what the
            # captured-variance contract actually cares about
            if lam is not None and abs(nrm - lam) <= tol * nrm:
                lam = nrm
                converged = True
                break
            lam = nrm
        if not converged:
            raise ConvergenceFailure(comp_index)
        big = int(np.argmax(np.abs(v)))
        if v[big] < 0:
            v = -v
        components[comp_index] = v
        cov = cov - lam * np.outer(v, v)
    coords = centered @ components.T
    return coords, components


def detect_outliers(coords: np.ndarray, multiplier: float = 2.0):
    """Distance of each row from the coordinate-wise center; rows beyond
    mean + multiplier * std are flagged. Returns (distances, flags,
    threshold)."""
    coords = np.asarray(coords, dtype=np.float64)
    if coords.shape[0] < 3:
        raise TooFewDocs("outlier detection needs at least 3 documents")
    center = coords.mean(axis=0)
    dists = np.sqrt(((coords - center) ** 2).sum(axis=1))
    threshold = float(dists.mean() + multiplier * dists.std())
    flags = dists > threshold
    return dists, flags, threshold


def apply_digression_penalty(score: float, is_outlier: bool, r: ScoreRange,
                             factor: float = 0.8) -> float:
    if not is_outlier:
        return score
    return min(max(r.lo + factor * (score - r.lo), r.lo), r.hi)


@dataclass
class ScoringParams:
    mode: str = "sum"  # sum | cluster
    score_range: ScoreRange = field(default_factory=lambda: ScoreRange(50.0, 100.0))
    k: int = 4
    labels: tuple[str, ...] = ("A", "B", "C", "D")
    grade_ranges: dict[str, ScoreRange] = field(
        default_factory=lambda: dict(DEFAULT_GRADE_RANGES))
    seed: int = 0
    outlier_multiplier: float = 2.0
    penalty_factor: float = 0.8
    sum_include_bow: bool = False
    reduce_to: int = 2


@dataclass
class DocumentScore:
    doc_id: str
    feature_sum: float
    grade: str | None
    score: float
    digression: bool
    theme_distance: float


@dataclass
class ScoreReport:
    mode: str
    gaussian: GaussianModel
    grade_ranges: dict[str, ScoreRange]
    outlier_threshold: float | None
    dropped_columns: tuple[int, ...]
    documents: list[DocumentScore]

    def to_obj(self) -> dict:
        def r6(x: float) -> float:
            return round(float(x) + 0.0, 6)

        docs = []
        for d in self.documents:
            entry: dict = {"doc_id": d.doc_id, "feature_sum": r6(d.feature_sum)}
            if d.grade is not None:
                entry["grade"] = d.grade
            entry["score"] = r6(d.score)
            entry["digression"] = bool(d.digression)
            entry["theme_distance"] = r6(d.theme_distance)
            docs.append(entry)
        return {
            "corpus": {
                "mode": self.mode,
                "gaussian": {"mu": r6(self.gaussian.mu), "sigma": r6(self.gaussian.sigma)},
                "grade_ranges": {label: [r6(r.lo), r6(r.hi)]
                                 for label, r in self.grade_ranges.items()},
                "outlier_threshold": None if self.outlier_threshold is None
                                     else r6(self.outlier_threshold),
                "dropped_columns": list(self.dropped_columns),
            },
            "documents": docs,
        }


def score_corpus(matrix, mode: str = "sum",
                 params: ScoringParams | None = None) -> ScoreReport:
    """Grade and score a feature matrix (see module docstring for the
    pipeline). ``matrix`` is a features.FeatureMatrix."""
    params = params or ScoringParams()
    if mode not in ("sum", "cluster"):
        raise ScoringError(f"unknown scoring mode: {mode!r}")

    quality = matrix.scalar_block
    if params.sum_include_bow:
        quality = np.hstack([quality, matrix.bow_block.astype(np.float64)])
    nm = normalize(quality)
    sums = feature_sums(nm)
    gaussian = fit_gaussian(sums)

    if mode == "cluster":
        if matrix.scalar_block.shape[0] < params.k:
            raise KTooLarge(
                f"cluster mode needs at least k={params.k} documents")
        model = kmeans(nm, params.k, params.seed)
        grades, _ = assign_grades(model, sums, params.labels)
        scores = grade_scores(sums, grades, params.grade_ranges)
        ranges = [params.grade_ranges[g] for g in grades]
        report_ranges = dict(params.grade_ranges)
    else:
        grades = [None] * len(matrix.doc_ids)
        scores = [map_score(float(s), gaussian, params.score_range) for s in sums]
        ranges = [params.score_range] * len(matrix.doc_ids)
        report_ranges = {}

    n_docs = len(matrix.doc_ids)
    coords, _ = reduce_dim(matrix.bow_block.astype(np.float64),
                           min(params.reduce_to, n_docs))
    if n_docs >= 3:
        dists, flags, threshold = detect_outliers(coords, params.outlier_multiplier)
    else:
        center = coords.mean(axis=0)
        dists = np.sqrt(((coords - center) ** 2).sum(axis=1))
        flags = np.zeros(n_docs, dtype=bool)
        threshold = None

    documents = []
    for i, doc_id in enumerate(matrix.doc_ids):
        final = apply_digression_penalty(scores[i], bool(flags[i]), ranges[i],
                                         params.penalty_factor)
        documents.append(DocumentScore(
            doc_id=doc_id,
            feature_sum=float(sums[i]),
            grade=grades[i],
            score=final,
            digression=bool(flags[i]),
            theme_distance=float(dists[i]),
        ))
    return ScoreReport(
        mode=mode,
        gaussian=gaussian,
        grade_ranges=report_ranges,
        outlier_threshold=threshold,
        dropped_columns=nm.dropped_columns,
        documents=documents,
    )
