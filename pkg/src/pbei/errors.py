"""Shared error types."""


class ResourceCapExceeded(RuntimeError):
    """A computation would exceed a configured size cap (variables or matrix
    columns); raised instead of silently truncating."""


MAX_VARIABLES = 14
DEFAULT_MAX_COLUMNS = 200_000


def check_variable_cap(nvars: int) -> None:
    if nvars > MAX_VARIABLES:
        raise ResourceCapExceeded(
            f"ring would have {nvars} variables, cap is {MAX_VARIABLES}"
        )
