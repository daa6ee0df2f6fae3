
class HylandError(Exception):
    """Base class of all errors raised by hyland"""

class ConfigError(HylandError):
    """Invalid or inconsistent run configuration"""

class NumericalError(HylandError):
    """A numerical stage could not produce a valid result"""

class DegenerateProfile(NumericalError):
    pass

class DegenerateSolution(NumericalError):

    def __init__(self, msg:str, data=None) -> None:
        super(DegenerateSolution, self).__init__(msg)
        # flagged data is still handed to the caller
        self.data = data

class DegenerateData(NumericalError):
    pass

class DegenerateForms(NumericalError):
    pass

class DegenerateConfiguration(NumericalError):
    pass

class NoConvergence(NumericalError):
    pass

class SpectralOnCircle(NumericalError):
    pass

class FlatnessTooLarge(NumericalError):
    pass
