"""Command handlers shared by the HTTP service and the CLI client.

Each handler takes validated request models and returns a Report; domain
failures are folded into the report (status, message, exit_code) so that
both front ends present identical outcomes.  Exit codes: 0 success,
1 malformed input (raised before these handlers run), 2 mathematical
precondition violation, 3 comparison mismatch, 4 resource bound.
"""

from __future__ import annotations

from fractions import Fraction

from ..errors import (ConditionError, EnumerationLimitError,
                      NotAnAutomorphismError, NotSpecialLinearError,
                      RestrictionError)
from ..exact import IntMatrix
from ..hodge import (HodgeDiamond, cr_diamond, enumerate_sectors,
                     invariant_hypersurface_diamond, mirror_check)
from ..potential import InvertiblePotential, build_potential, transpose_potential
from ..shioda import BirationalModel, birational_model, compare_mirrors
from ..symmetry import (OrbifoldDescriptor, PhaseGroup, PhaseVector,
                        aut_group, build_orbifold, dual_group, j_group,
                        mirror_orbifold, sl_group)
from .models import (CompareRequest, DiamondEntryOut, DiamondOut, GeneratorIn,
                     GroupIn, GroupOut, HodgeRequest, ModelOut, ModelRequest,
                     OrbifoldInput, PhaseOut, PieceOut, PotentialOut, Report,
                     SectorOut)

_DOMAIN_ERRORS = (ConditionError, NotAnAutomorphismError,
                  NotSpecialLinearError, RestrictionError, ValueError)


def _build(doc: OrbifoldInput) -> OrbifoldDescriptor:
    p = build_potential(IntMatrix(doc.matrix), scale=doc.scale or 1)
    gens = [PhaseVector.of(g.num, g.den) for g in doc.group.generators]
    return build_orbifold(p, gens)


def _potential_out(p: InvertiblePotential) -> PotentialOut:
    return PotentialOut(
        variables=p.nvars,
        monomials=[list(r) for r in p.a.rows],
        degree=p.d,
        weights=list(p.weights),
        reduced_weights=list(p.reduced_weights),
        reduced_degree=p.reduced_degree,
        calabi_yau=p.calabi_yau,
        gorenstein=p.gorenstein,
        aut_order=abs(p.det),
        pieces=[PieceOut(kind=piece.kind, variables=list(piece.variables),
                         exponents=list(piece.exponents))
                for piece in p.pieces],
    )


def _group_out(name: str, g: PhaseGroup, den: int | None = None) -> GroupOut:
    den = den or g.den
    lattice = g.lattice_at(den)
    reduced = [[e % den for e in row] for row in lattice.rows]
    return GroupOut(
        name=name,
        order=g.order,
        denominator=den,
        generators=[PhaseOut(num=row, den=den)
                    for row in reduced if any(row)],
    )


def _model_out(side: str, model: BirationalModel) -> ModelOut:
    j_order = model.fermat_degree
    return ModelOut(
        side=side,
        fermat_degree=model.fermat_degree,
        quotient_order=model.quotient_group.order // j_order,
        group=_group_out("quotient", model.quotient_group, model.fermat_degree),
    )


def _diamond_out(name: str, d: HodgeDiamond) -> DiamondOut:
    return DiamondOut(
        name=name,
        dimension=d.dim,
        entries=[DiamondEntryOut(p=str(p), q=str(q), h=h) for p, q, h in d.items()],
    )


def _phase_out(v: PhaseVector) -> PhaseOut:
    return PhaseOut(num=list(v.nums), den=v.den)


def _error_report(command: str, err: Exception) -> Report:
    if isinstance(err, EnumerationLimitError):
        return Report(command=command, status="resource-limit", exit_code=4,
                      message=str(err))
    return Report(command=command, status="invalid", exit_code=2, message=str(err))


def validate(doc: OrbifoldInput) -> Report:
    try:
        orb = _build(doc)
    except _DOMAIN_ERRORS as err:
        return _error_report("validate", err)
    p = orb.potential
    j, sl = j_group(p), sl_group(p)
    checks = [
        f"|Aut| = |det A| = {aut_group(p).order}",
        f"J (order {j.order}) <= G (order {orb.group.order})"
        f" <= SL (order {sl.order}): ok",
        f"effective quotient order |G|/|J| = {orb.quotient_order}",
    ]
    return Report(
        command="validate", status="ok", exit_code=0,
        potential=_potential_out(p),
        groups=[_group_out("J", j), _group_out("G", orb.group),
                _group_out("SL", sl)],
        checks=checks,
    )


def mirror(doc: OrbifoldInput) -> Report:
    try:
        orb = _build(doc)
        dual = dual_group(orb)
        pt = transpose_potential(orb.potential)
        mirror_orb = mirror_orbifold(orb)
    except _DOMAIN_ERRORS as err:
        return _error_report("mirror", err)
    den = pt.d
    lattice = dual.lattice_at(den)
    reduced = [[e % den for e in row] for row in lattice.rows]
    out_doc = OrbifoldInput(
        n=pt.nvars - 1,
        matrix=[list(r) for r in pt.a.rows],
        group=GroupIn(generators=[
            GeneratorIn(num=row, den=den) for row in reduced if any(row)]),
        scale=doc.scale,
    )
    jt = j_group(pt)
    return Report(
        command="mirror", status="ok", exit_code=0,
        potential=_potential_out(orb.potential),
        transpose=_potential_out(pt),
        groups=[_group_out("G", orb.group), _group_out("G^T", dual),
                _group_out("J^T", jt)],
        checks=[f"dual group order {dual.order}, "
                f"effective quotient order {mirror_orb.quotient_order}"],
        mirror_input=out_doc,
    )


def model(req: ModelRequest) -> Report:
    try:
        orb = _build(req.orbifold)
        bm = birational_model(orb, req.side, scale=req.scale)
        reduced = bm.reduce()
    except _DOMAIN_ERRORS as err:
        return _error_report("model", err)
    return Report(
        command="model", status="ok", exit_code=0,
        potential=_potential_out(orb.potential),
        models=[_model_out(req.side, bm)]
        + ([_model_out(f"{req.side} (reduced)", reduced)] if reduced != bm else []),
    )


def compare(req: CompareRequest) -> Report:
    try:
        orb_a = _build(req.first)
        orb_b = _build(req.second)
        report = compare_mirrors(orb_a, orb_b)
    except _DOMAIN_ERRORS as err:
        return _error_report("compare", err)
    models = [_model_out("mirror of first", report.mirror_model_first),
              _model_out("mirror of second", report.mirror_model_second)]
    checks = [
        f"symmetry groups equal: {report.groups_equal}",
        f"mirror models equal at degree {report.common_degree}: {report.models_equal}",
    ]
    if report.certificate is not None:
        models.append(_model_out("common model (certificate)", report.certificate))
        checks.append("birationality certificate issued")
        return Report(command="compare", status="ok", exit_code=0,
                      models=models, checks=checks)
    return Report(command="compare", status="mismatch", exit_code=3,
                  message="symmetry groups differ and no common model was found",
                  models=models, checks=checks)


def hodge(req: HodgeRequest) -> Report:
    try:
        orb = _build(req.orbifold)
        sectors = enumerate_sectors(orb, req.limit)
    except EnumerationLimitError as err:
        return _error_report("hodge", err)
    except _DOMAIN_ERRORS as err:
        return _error_report("hodge", err)
    locus_names = {"zero": "whole subspace", "zero-dimensional": "points",
                   "positive-dimensional": "hypersurface"}
    sector_rows = [
        SectorOut(element=_phase_out(s.gamma),
                  fixed_indices=list(s.fixed_indices),
                  age=str(s.age),
                  locus=locus_names[s.restriction.kind])
        for s in sectors
    ]
    diamonds: list[DiamondOut] = []
    checks: list[str] = []
    status, exit_code, message = "ok", 0, None
    try:
        if req.invariant:
            untwisted = next(s for s in sectors if s.gamma.is_identity)
            diamonds.append(_diamond_out(
                "invariant", invariant_hypersurface_diamond(untwisted, orb)))
        if req.cr:
            diamonds.append(_diamond_out("chen-ruan", cr_diamond(orb, req.limit)))
        if req.check_mirror:
            result = mirror_check(orb, req.limit)
            diamonds.append(_diamond_out("chen-ruan", result.diamond))
            diamonds.append(_diamond_out("chen-ruan (mirror)", result.mirror_diamond))
            checks.append("mirror symmetry: PASS" if result.passed
                          else "mirror symmetry: FAIL")
            if not result.passed:
                status, exit_code = "mismatch", 3
                message = f"mismatched bidegrees: {result.mismatches}"
    except EnumerationLimitError as err:
        return _error_report("hodge", err)
    except _DOMAIN_ERRORS as err:
        return _error_report("hodge", err)
    return Report(command="hodge", status=status, exit_code=exit_code,
                  message=message, potential=_potential_out(orb.potential),
                  sectors=sector_rows, diamonds=diamonds, checks=checks)
