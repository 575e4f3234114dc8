from ._homquot import *  # noqa: F401,F403
