from __future__ import annotations

from django.conf import settings
from django.db import models
from rest_framework import serializers

from .canonical import ladder
from .classification import ClassLabel, RuleFired
from .combinatorics import mu_power
from .monomials import MAX_EXPONENT, Monomial, minimalize

# Upper limit on the generators of one materialized ladder component.
MAX_MATERIALIZED_GENERATORS = 50_000


class OutputFormat(models.TextChoices):
    ASCII = "ascii", "Aligned text table"
    JSON = "json", "JSON document"
    CSV = "csv", "Comma-separated values"


def _default_format():
    return settings.REES_DEFAULT_FORMAT


# --------------------------------------------------------------------------
# Fields
# --------------------------------------------------------------------------


class MonomialField(serializers.Field):
    """A monomial as its exponent list, ``[2, 0, 1]`` for ``x^2 z``."""

    default_error_messages = {
        "invalid": "Expected a non-empty list of non-negative integers.",
        "overflow": f"Exponents are limited to {MAX_EXPONENT}.",
    }

    def to_representation(self, value: Monomial):
        return list(value.exponents)

    def to_internal_value(self, data):
        if not isinstance(data, list) or not data:
            self.fail("invalid")
        if not all(isinstance(value, int) and value >= 0 for value in data):
            self.fail("invalid")
        if any(value > MAX_EXPONENT for value in data):
            self.fail("overflow")
        return Monomial(tuple(data))


class IdealField(serializers.Field):
    """A monomial ideal as the sorted list of its minimal generators."""

    default_error_messages = {
        "invalid": "Expected a list of exponent lists of one common length.",
    }

    def to_representation(self, value):
        return [list(g.exponents) for g in value.sorted_gens()]

    def to_internal_value(self, data):
        if not isinstance(data, list) or not data:
            self.fail("invalid")
        monomial = MonomialField()
        gens = [monomial.to_internal_value(item) for item in data]
        if len({g.dim for g in gens}) != 1:
            self.fail("invalid")
        return minimalize(gens)


class PairField(serializers.ListField):
    """An exponent pair ``(a, b)`` standing for ``s^a t^b``."""

    child = serializers.IntegerField(min_value=0)

    def __init__(self, **kwargs):
        kwargs.setdefault("min_length", 2)
        kwargs.setdefault("max_length", 2)
        super().__init__(**kwargs)


# --------------------------------------------------------------------------
# Command options
# --------------------------------------------------------------------------


class FormatQuerySerializer(serializers.Serializer):
    format = serializers.ChoiceField(choices=OutputFormat.choices, default=_default_format)


class TableQuerySerializer(FormatQuerySerializer):
    dmax = serializers.IntegerField(min_value=2, default=lambda: settings.REES_TABLE_D_MAX)
    lmax = serializers.IntegerField(min_value=1, default=lambda: settings.REES_TABLE_ELL_MAX)
    workers = serializers.IntegerField(min_value=1, default=lambda: settings.REES_TABLE_WORKERS)
    format = serializers.ChoiceField(choices=OutputFormat.choices, default=OutputFormat.ASCII)


class LemmaIneqQuerySerializer(FormatQuerySerializer):
    dmax = serializers.IntegerField(min_value=3, default=lambda: settings.REES_SWEEP_D_MAX)
    lmax = serializers.IntegerField(min_value=2, default=lambda: settings.REES_SWEEP_ELL_MAX)
    report_gaps = serializers.BooleanField(default=False)


class GoodCheckQuerySerializer(FormatQuerySerializer):
    d = serializers.IntegerField(min_value=1, required=False)
    ideal = serializers.CharField()
    reduction = serializers.CharField()


class CertificateQuerySerializer(FormatQuerySerializer):
    dim = serializers.ChoiceField(choices=[2], default=2)
    ell = serializers.IntegerField(min_value=1)
    nmax = serializers.IntegerField(min_value=0, default=lambda: settings.REES_CLAIM_DEGREES)


class VeroneseQuerySerializer(FormatQuerySerializer):
    r = serializers.IntegerField(min_value=1)
    ell = serializers.IntegerField(min_value=1)


class ClassifyQuerySerializer(FormatQuerySerializer):
    d = serializers.IntegerField(min_value=2)
    ell = serializers.IntegerField(min_value=1)


class ColonQuerySerializer(FormatQuerySerializer):
    lhs = serializers.CharField()
    rhs = serializers.CharField()
    d = serializers.IntegerField(min_value=1, required=False)


class LadderQuerySerializer(FormatQuerySerializer):
    d = serializers.IntegerField(min_value=2)
    ell = serializers.IntegerField(min_value=1)
    nmax = serializers.IntegerField(min_value=0, default=0)

    def validate(self, attrs):
        d, ell, nmax = attrs["d"], attrs["ell"], attrs["nmax"]
        if nmax:
            largest = mu_power(d, ladder(d, ell).exponent_at(nmax))
            if largest > MAX_MATERIALIZED_GENERATORS:
                raise serializers.ValidationError(
                    {"nmax": f"Degree {nmax} has {largest} generators; lower nmax."}
                )
        return attrs


class OracleCheckQuerySerializer(FormatQuerySerializer):
    trials = serializers.IntegerField(min_value=1, default=lambda: settings.REES_ORACLE_TRIALS)
    seed = serializers.IntegerField(default=lambda: settings.REES_ORACLE_SEED)
    dmax = serializers.IntegerField(min_value=1, max_value=4, default=3)
    max_degree = serializers.IntegerField(min_value=1, max_value=8, default=5)


# --------------------------------------------------------------------------
# Output records
# --------------------------------------------------------------------------


class IneqSidesSerializer(serializers.Serializer):
    d = serializers.IntegerField()
    ell = serializers.IntegerField()
    b = serializers.IntegerField()
    i = serializers.IntegerField()
    lhs = serializers.IntegerField()
    rhs = serializers.IntegerField()
    gap = serializers.IntegerField()


class CounterexampleSerializer(serializers.Serializer):
    d = serializers.IntegerField()
    ell = serializers.IntegerField()
    reason = serializers.CharField()


class SweepReportSerializer(serializers.Serializer):
    d_max = serializers.IntegerField()
    ell_max = serializers.IntegerField()
    ok = serializers.BooleanField()
    counterexample = CounterexampleSerializer(allow_null=True)
    gaps = IneqSidesSerializer(many=True, required=False)


class ObstructionSerializer(serializers.Serializer):
    mu_bound = serializers.IntegerField()
    e_bound = serializers.IntegerField()


class UlrichSerializer(serializers.Serializer):
    c = serializers.IntegerField()
    mu_C = serializers.IntegerField()
    e_C = serializers.IntegerField()
    is_ulrich = serializers.BooleanField()


class EvidenceSerializer(serializers.Serializer):
    b = serializers.IntegerField()
    mu_K = serializers.IntegerField()
    gap = serializers.IntegerField(allow_null=True)
    rule_fired = serializers.ChoiceField(choices=RuleFired.choices)
    obstruction = ObstructionSerializer(allow_null=True)
    ulrich = UlrichSerializer(allow_null=True)
    associated_graded_gorenstein = serializers.BooleanField()
    citation = serializers.CharField()


class TableSerializer(serializers.ListSerializer):
    """The grid as a d-major array of cells, one per ``(d, ell)``."""

    def validate(self, attrs):
        keys = [(cell["d"], cell["ell"]) for cell in attrs]
        if not keys:
            raise serializers.ValidationError("A table has at least one cell.")
        d_max = max(d for d, _ in keys)
        ell_max = max(ell for _, ell in keys)
        expected = [(d, ell) for d in range(2, d_max + 1) for ell in range(1, ell_max + 1)]
        if keys != expected:
            raise serializers.ValidationError("Cells must cover the grid once, in d-major order.")
        return attrs


class CellSerializer(serializers.Serializer):
    d = serializers.IntegerField(min_value=2)
    ell = serializers.IntegerField(min_value=1)
    label = serializers.ChoiceField(choices=ClassLabel.choices)
    evidence = EvidenceSerializer()

    class Meta:
        list_serializer_class = TableSerializer


class GoodIdealReportSerializer(serializers.Serializer):
    ideal = IdealField()
    reduction = IdealField()
    stable = serializers.BooleanField()
    colon_closed = serializers.BooleanField()
    good = serializers.BooleanField()
    colon = IdealField(source="colon_result")
    witness = MonomialField(allow_null=True)


class LadderReportSerializer(serializers.Serializer):
    d = serializers.IntegerField(source="ladder.d")
    ell = serializers.IntegerField(source="ladder.ell")
    b = serializers.IntegerField(source="ladder.b")
    tail_exponent = serializers.IntegerField(source="ladder.tail_exponent")
    a_invariant = serializers.IntegerField(source="ladder.a_invariant")
    mu_K = serializers.IntegerField()
    mu_MK = serializers.IntegerField()
    gap = serializers.IntegerField(allow_null=True)
    obstruction = ObstructionSerializer(allow_null=True)
    components = serializers.ListField(child=IdealField(), allow_null=True)


class CertificateSerializer(serializers.Serializer):
    """``f``, ``g`` and ``h`` are printed in ``x, y`` notation (``x^2``)."""

    ell = serializers.IntegerField(source="certificate.ell")
    f = serializers.CharField(source="certificate.f")
    g = serializers.CharField(source="certificate.g")
    h = serializers.CharField(source="certificate.h")
    J = IdealField(source="certificate.J")
    identities = serializers.DictField(
        child=serializers.BooleanField(), source="certificate.checks"
    )
    n_max = serializers.IntegerField()
    degrees_checked = serializers.ListField(child=serializers.IntegerField())
    claim_by_degree = serializers.ListField(child=serializers.BooleanField())
    claim_holds = serializers.BooleanField()


class VeroneseReportSerializer(serializers.Serializer):
    r = serializers.IntegerField()
    ell = serializers.IntegerField()
    f = PairField()
    g = PairField()
    h = PairField()
    minimal_multiplicity = serializers.BooleanField()
    checks = serializers.DictField(child=serializers.BooleanField())
    identities = serializers.DictField(child=serializers.BooleanField())
    degrees_checked = serializers.ListField(child=serializers.IntegerField())
    gorenstein_branch = serializers.BooleanField()
    claim_holds = serializers.BooleanField()


class ColonResultSerializer(serializers.Serializer):
    dim = serializers.IntegerField()
    lhs = IdealField()
    rhs = IdealField()
    colon = IdealField()


class OracleReportSerializer(serializers.Serializer):
    trials = serializers.IntegerField()
    seed = serializers.IntegerField()
    dim_max = serializers.IntegerField()
    max_degree = serializers.IntegerField()
    mismatches = serializers.IntegerField()
    ok = serializers.BooleanField()
    first_mismatch = serializers.ListField(child=IdealField(), allow_null=True)
