"""Characteristic sets and inclusion-exclusion-like identities for set-valued
expressions over X1..Xn."""

from .charset import (CharSet, charset, charset_compl, charset_inter,
                      charset_union, equivalent, indices_of, mask_of)
from .errors import (ArityError, ArityMismatch, CoefficientOverflow, EmptyIndex,
                     InclExclError, IndexOutOfRange, ParseError, RangeError)
from .evaluate import (SetSequence, Signature, check_identity, eval_charset,
                       eval_expr, i_vector, indicator_sequence, random_sequence,
                       sigma_vector, signatures)
from .expr import (Compl, Empty, Expr, Inter, Union, Var, parse, random_expr,
                   to_text)
from .iel import (IsLike, NotLike, binom, binomial_forward, binomial_inverse,
                  coefficients, decide_iel, family_at_least, family_even,
                  family_odd)
from .render import (IdentityReport, build_report, parse_report_json,
                     render_json, render_latex, render_text)

__version__ = "0.1.0"
