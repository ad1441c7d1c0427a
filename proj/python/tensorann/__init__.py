"""Exact computations with annihilators of tensor modules over gl, sl, o and sp."""

from ._core import (
    ann_contained,
    branch,
    casimir,
    downset,
    dual,
    gt_iterated,
    gt_pair,
    is_central,
    kostant_partition,
    leq,
    module_dim,
    normal_form,
    sc_contained,
    sc_set,
    sl2_classify,
    sl2_member,
    sl2_witnesses,
    std_tableaux_count,
    tensor_decomposition,
    verify,
    weyl_dim,
)

__all__ = [
    "ann_contained",
    "branch",
    "casimir",
    "downset",
    "dual",
    "gt_iterated",
    "gt_pair",
    "is_central",
    "kostant_partition",
    "leq",
    "module_dim",
    "normal_form",
    "sc_contained",
    "sc_set",
    "sl2_classify",
    "sl2_member",
    "sl2_witnesses",
    "std_tableaux_count",
    "tensor_decomposition",
    "verify",
    "weyl_dim",
]
