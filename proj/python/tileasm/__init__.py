"""Temperature-1 tile assembly toolkit (C++ core)."""

from ._core import (
    TileasmError,
    cogrow,
    confluence,
    displacement,
    find_off_the_wall,
    find_periodic,
    format_tas,
    ground,
    grow,
    is_free_path,
    is_pumpable,
    non_causal,
    parse_word,
    render_svg,
    reverse,
    rotate90,
    run_verify_suite,
    side_of,
    verify_suites,
)

__all__ = [name for name in dir() if not name.startswith("_")]
