from __future__ import annotations
from typing import Generic, GenericAlias, TypeVar, Any, get_args, get_origin

T = TypeVar("T")

def check_type(obj:Any, t:type) -> bool:
    # type[X] asks for a subclass of X rather than an instance
    if isinstance(t, GenericAlias) and get_origin(t) is type:
        return isinstance(obj, type) and issubclass(obj, get_args(t))
    return isinstance(obj, t)

def resolve_parameters(obj:Any, origin:type) -> tuple:
    """Type arguments `obj` was parameterized with, either on its class or on the instance"""
    for base in getattr(type(obj), '__orig_bases__', ()):
        if get_origin(base) is origin:
            return get_args(base)
    return get_args(obj.__orig_class__)

class typedlist(Generic[T], list):
    """List that only admits items of its parameter type.

    Items of another type are passed through `handle_type_conflict`
    first, which subclasses override to convert them.
    """

    def __init__(self, vals:list[Any] =()) -> None:
        super(typedlist, self).__init__()
        # __orig_class__ is only set after construction, direct
        # instances like typedlist[int]() must start out empty
        self.extend(vals)

    @property
    def _T(self) -> type:
        return resolve_parameters(self, typedlist)[0]

    def handle_type_conflict(self, val:Any) -> T:
        return val

    def check_type(self, val:Any) -> T:
        if not check_type(val, self._T):
            val = self.handle_type_conflict(val)
        if not check_type(val, self._T):
            raise TypeError("Expected instance of type %s, got %s." % (self._T, type(val)))
        return val

    def append(self, val:Any) -> None:
        super(typedlist, self).append(self.check_type(val))

    def insert(self, idx:int, val:Any) -> None:
        super(typedlist, self).insert(idx, self.check_type(val))

    def extend(self, vals:list[Any]) -> None:
        super(typedlist, self).extend([self.check_type(v) for v in vals])

    def __setitem__(self, idx, val) -> None:
        if isinstance(idx, slice):
            val = [self.check_type(v) for v in val]
        else:
            val = self.check_type(val)
        super(typedlist, self).__setitem__(idx, val)

    def __iadd__(self, vals:list[Any]) -> typedlist[T]:
        self.extend(vals)
        return self
