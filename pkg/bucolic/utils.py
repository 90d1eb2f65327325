from django.conf import settings

from . import defaults


def get_setting(name, value=None):
    """
    Resolve a tunable: an explicit value wins, then the Django setting of the
    same name (when settings are configured), then the packaged default.

    :param str name: An upper-case setting name declared in bucolic.defaults
    :param value: An explicit override, ignored when None
    :return: The effective value
    """

    if value is not None:
        return value
    default = getattr(defaults, name)
    if not settings.configured:
        return default
    return getattr(settings, name, default)


def sorted_tuple(items):
    """
    Deterministic ordering used for every reported vertex collection.
    """

    return tuple(sorted(items))
