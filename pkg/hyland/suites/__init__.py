from .base import SuiteConfig, SuiteResult, VerificationSuite
from .context import VerificationContext
from .flatness import FlatnessSuiteConfig, FlatnessSuite
from .forms import FormsSuiteConfig, FormsSuite
from .landslide import LandslideSuiteConfig, LandslideSuite
from .holonomy import HolonomySuiteConfig, HolonomySuite
from .holomorphy import HolomorphySuiteConfig, HolomorphySuite
from .gauge import GaugeSuiteConfig, GaugeSuite
from .congruence import CongruenceSuiteConfig, CongruenceSuite
from .auto import AutoSuite
from .collection import SuiteCollection

AnySuiteConfig = \
    FlatnessSuiteConfig | \
    FormsSuiteConfig | \
    LandslideSuiteConfig | \
    HolonomySuiteConfig | \
    HolomorphySuiteConfig | \
    GaugeSuiteConfig | \
    CongruenceSuiteConfig
