"""Analysis reports: everything the CLI prints about one ideal."""

from __future__ import annotations

from dataclasses import dataclass

from .derivations import (
    aut_weight_report,
    format_covector,
    perm_symmetries,
    weight_decomposition,
)
from .errors import UnsupportedDimension
from .ideals import MonomialIdeal, Vec, cosupport, in_orthant
from .parsing import IdealSource, default_variables, render_ideal
from .reconstruction import RestrictedWeightData, reconstruct_ideal

MACHINE_FORMAT = "monolie.report 1"


@dataclass(frozen=True)
class AnalysisReport:
    """All computed invariants of one full finite monomial ideal."""

    ideal: MonomialIdeal
    variables: tuple[str, ...]
    algebra_dim: int
    cosupport_points: tuple[Vec, ...]
    weight_spaces: tuple[tuple[Vec, int, tuple[str, ...]], ...]
    torus_rank: int
    roots: tuple[tuple[Vec, int], ...]
    lie_dim: int
    faithful: bool
    perms: tuple[tuple[int, ...], ...]
    roundtrip_ok: bool

    def dims(self) -> dict[Vec, int]:
        return {deg: dim for deg, dim, _ in self.weight_spaces}


def analyze(source: IdealSource | MonomialIdeal) -> AnalysisReport:
    """Run the full weight-space analysis, including the reconstruction check."""
    if isinstance(source, IdealSource):
        ideal, variables = source.ideal, source.variables
    else:
        ideal, variables = source, default_variables(source.n)
    decomp = weight_decomposition(ideal)
    summary = aut_weight_report(ideal)
    data = RestrictedWeightData.from_decomposition(decomp)
    spaces = tuple(
        (deg, ws.dim, tuple(format_covector(d.covector) for d in ws.basis))
        for deg, ws in decomp.spaces.items()
    )
    return AnalysisReport(
        ideal=ideal,
        variables=variables,
        algebra_dim=summary.algebra_dim,
        cosupport_points=cosupport(ideal).sorted_points(),
        weight_spaces=spaces,
        torus_rank=summary.torus_rank,
        roots=summary.roots,
        lie_dim=summary.lie_dim,
        faithful=summary.faithful,
        perms=perm_symmetries(ideal),
        roundtrip_ok=reconstruct_ideal(data) == ideal,
    )


def _fmt_vec(v: Vec) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def _fmt_perm(sigma: tuple[int, ...]) -> str:
    return "[" + " ".join(str(i + 1) for i in sigma) + "]"


def render_human(report: AnalysisReport) -> str:
    lines = [
        f"ideal: {render_ideal(report.ideal, report.variables)}",
        f"variables: {' '.join(report.variables)}",
        f"algebra dimension: {report.algebra_dim}",
        f"cosupport ({len(report.cosupport_points)} points): "
        + " ".join(_fmt_vec(p) for p in report.cosupport_points),
        "weight spaces (degree : dim : covectors):",
    ]
    for deg, dim, covs in report.weight_spaces:
        lines.append(f"  {_fmt_vec(deg)} : {dim} : {', '.join(covs)}")
    roots = " ".join(f"{_fmt_vec(d)}:{m}" for d, m in report.roots) or "none"
    lines += [
        f"torus rank: {report.torus_rank}",
        f"roots: {roots}",
        f"derivation algebra dimension: {report.lie_dim}",
        f"torus action faithful: {'yes' if report.faithful else 'no'}",
        "variable permutations preserving the ideal: "
        + ", ".join(_fmt_perm(s) for s in report.perms)
        + f" (order {len(report.perms)})",
        f"round trip: {'ok' if report.roundtrip_ok else 'MISMATCH'}",
    ]
    return "\n".join(lines)


def render_machine(report: AnalysisReport) -> str:
    lines = [
        f"FORMAT {MACHINE_FORMAT}",
        f"IDEAL {render_ideal(report.ideal, report.variables)}",
        f"VARS {' '.join(report.variables)}",
        f"N {report.ideal.n}",
        f"ALGDIM {report.algebra_dim}",
        f"LIEDIM {report.lie_dim}",
        f"TORUS {report.torus_rank}",
        f"FAITHFUL {'yes' if report.faithful else 'no'}",
        f"PERMORDER {len(report.perms)}",
    ]
    for sigma in report.perms:
        lines.append("PERM " + " ".join(str(i + 1) for i in sigma))
    lines.append(f"ROUNDTRIP {'ok' if report.roundtrip_ok else 'mismatch'}")
    for deg, dim, _ in report.weight_spaces:
        lines.append("DEG " + " ".join(str(x) for x in deg) + f" : {dim}")
    return "\n".join(lines)


_LEGEND = "legend: #=ideal  G=inner degree with derivations  R=outer degree with derivations  o=cosupport, no derivations  .=none"


def staircase_diagram(ideal: MonomialIdeal) -> str:
    """ASCII staircase with weight-space markings, for n <= 2.

    The grid covers [-1, box+1] in every coordinate; rows are printed with
    the highest second coordinate first, and a legend line is appended.
    """
    if ideal.n > 2:
        raise UnsupportedDimension("staircase diagrams are only drawn for n <= 2")
    positive = weight_decomposition(ideal).dims()
    cos = cosupport(ideal)

    def glyph(cell: Vec) -> str:
        if in_orthant(cell):
            if ideal.contains(cell):
                return "#"
            if positive.get(cell, 0) > 0:
                return "G"
            return "o"
        return "R" if positive.get(cell, 0) > 0 else "."

    xs = range(-1, cos.box[0] + 2)
    lines = []
    if ideal.n == 1:
        lines.append(" ".join(glyph((x,)) for x in xs))
    else:
        for y in range(cos.box[1] + 1, -2, -1):
            lines.append(" ".join(glyph((x, y)) for x in xs))
    lines.append(_LEGEND)
    return "\n".join(lines)
