from .typedlist import check_type, resolve_parameters
from typing import Generic, TypeVar, Any

K = TypeVar("K")
V = TypeVar("V")

class typedmapping(Generic[K, V], dict):
    """Dictionary that validates the types of its keys and values"""

    @property
    def _K(self) -> type:
        return resolve_parameters(self, typedmapping)[0]

    @property
    def _V(self) -> type:
        return resolve_parameters(self, typedmapping)[1]

    def handle_key_type_conflict(self, key:Any) -> K:
        return key

    def handle_val_type_conflict(self, val:Any) -> V:
        return val

    def _validate(self, obj:Any, t:type, handle, what:str) -> Any:
        if not check_type(obj, t):
            obj = handle(obj)
        if not check_type(obj, t):
            raise TypeError("Expected %s of type %s, got %s." % (what, t, type(obj)))
        return obj

    def check_key_type(self, key:Any) -> K:
        return self._validate(key, self._K, self.handle_key_type_conflict, "key")

    def check_val_type(self, val:Any) -> V:
        return self._validate(val, self._V, self.handle_val_type_conflict, "value")

    def update(self, other:Any =(), **kwargs) -> None:
        for k, v in dict(other, **kwargs).items():
            self[k] = v

    def __setitem__(self, key:K, val:V) -> None:
        super(typedmapping, self).__setitem__(self.check_key_type(key), self.check_val_type(val))
