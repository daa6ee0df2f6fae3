import os
import json
import numpy as np
from typing import Any

# declared precision of every written report
SIGNIFICANT_DIGITS = 12

def round_significant(x:float, digits:int =SIGNIFICANT_DIGITS) -> float:
    if not np.isfinite(x) or x == 0:
        return float(x)
    return float("%.*g" % (digits, x))

def to_jsonable(obj:Any, digits:int =SIGNIFICANT_DIGITS) -> Any:
    """Plain python version of a report with floats rounded and complex numbers as [re, im]"""
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v, digits) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v, digits) for v in obj]
    if isinstance(obj, np.ndarray):
        return to_jsonable(obj.tolist(), digits)
    if isinstance(obj, (bool, np.bool_)):
        return bool(obj)
    if isinstance(obj, (int, np.integer)):
        return int(obj)
    if isinstance(obj, (complex, np.complexfloating)):
        return [round_significant(obj.real, digits), round_significant(obj.imag, digits)]
    if isinstance(obj, (float, np.floating)):
        x = round_significant(float(obj), digits)
        # json has no literal for these
        return x if np.isfinite(x) else str(x)
    return obj

def dumps(report:Any) -> str:
    return json.dumps(to_jsonable(report), indent=2, sort_keys=True)

def write_report(report:Any, path:str) -> str:
    os.makedirs(os.path.dirname(os.path.abspath(path)), exist_ok=True)
    with open(path, 'w+') as f:
        f.write(dumps(report))
    return path
