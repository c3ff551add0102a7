"""Exact Hopf superalgebras over cyclotomic fields.

Algebras are structure-constant tables with exact Q(zeta_n) entries.
Vectors are lists of CycloScalar in the algebra's basis; reports,
fingerprints and suite results are plain dicts.
"""

from ._core import (
    CycloScalar,
    Error,
    HopfSuperData,
    Presentation,
    SuperDatum,
    admissible_data,
    aeg_superize,
    antipode_spectrum,
    bosonize,
    builtin,
    builtin_names,
    builtin_presentation,
    builtin_source,
    canonical_datum,
    characters,
    coinvariant_superalgebra,
    compile,
    compile_presentation,
    distinguish,
    dual,
    find_isomorphism,
    fingerprint,
    grouplikes,
    identify_builtin,
    is_pointed,
    is_semisimple,
    render,
    run_suite,
    suite_names,
    super_data,
    superforms,
    tensor_product,
    verify_axioms,
    verify_bosonization_roundtrip,
    verify_isomorphism,
    verify_pairing,
)

__all__ = [name for name in dir() if not name.startswith("_")]
