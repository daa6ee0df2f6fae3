from .base import VerificationSuite, SuiteConfig
from .flatness import FlatnessSuiteConfig, FlatnessSuite
from .forms import FormsSuiteConfig, FormsSuite
from .landslide import LandslideSuiteConfig, LandslideSuite
from .holonomy import HolonomySuiteConfig, HolonomySuite
from .holomorphy import HolomorphySuiteConfig, HolomorphySuite
from .gauge import GaugeSuiteConfig, GaugeSuite
from .congruence import CongruenceSuiteConfig, CongruenceSuite
# utils
from hyland.utils.typedmapping import typedmapping

class AutoSuite(object):
    MAPPING = typedmapping[
        type[SuiteConfig],
        type[VerificationSuite]
    ]()

    def __init__(self):
        raise EnvironmentError("AutoClasses are designed to be instantiated using the `AutoClass.from_config(config)` method.")

    @classmethod
    def from_config(cls, config:SuiteConfig, **kwargs) -> VerificationSuite:
        if type(config) not in cls.MAPPING:
            raise KeyError("No suite registered for config type `%s`" % type(config).__name__)
        return cls.MAPPING[type(config)](config, **kwargs)

    @classmethod
    def register(cls, config_t:type[SuiteConfig], suite_t:type[VerificationSuite]) -> None:
        cls.MAPPING[config_t] = suite_t

AutoSuite.register(FlatnessSuiteConfig, FlatnessSuite)
AutoSuite.register(FormsSuiteConfig, FormsSuite)
AutoSuite.register(LandslideSuiteConfig, LandslideSuite)
AutoSuite.register(HolonomySuiteConfig, HolonomySuite)
AutoSuite.register(HolomorphySuiteConfig, HolomorphySuite)
AutoSuite.register(GaugeSuiteConfig, GaugeSuite)
AutoSuite.register(CongruenceSuiteConfig, CongruenceSuite)
