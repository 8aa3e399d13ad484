from ._pcubed import *  # noqa: F401,F403
from ._pcubed import __doc__  # noqa: F401
