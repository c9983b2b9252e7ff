from ._richman import *  # noqa: F401,F403
from ._richman import RichmanError, UnitaryTable  # noqa: F401
