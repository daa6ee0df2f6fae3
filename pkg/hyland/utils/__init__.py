from .typedlist import typedlist
from .typedmapping import typedmapping
from .report import round_significant, to_jsonable, dumps, write_report
