"""The untyped λ-calculus front end."""

from .naive import naive_normalize, naive_subst
from .reduce import beta_step, contract, has_redex, normalize
from .surface import NApp, NLam, NVar, parse, parse_term, pretty_codebruijn, pretty_index, pretty_named, resolve
from .syntax import LAM, LAM_DESC, LAM_TAG, app, app_r, apps, enumerate_terms, lam, lam_r, size, thin_db, var, view

__all__ = [
    "LAM", "LAM_DESC", "LAM_TAG", "NApp", "NLam", "NVar", "app", "app_r", "apps", "beta_step",
    "contract", "enumerate_terms", "has_redex", "lam", "lam_r", "naive_normalize", "naive_subst",
    "normalize", "parse", "parse_term", "pretty_codebruijn", "pretty_index", "pretty_named",
    "resolve", "size", "thin_db", "var", "view",
]
