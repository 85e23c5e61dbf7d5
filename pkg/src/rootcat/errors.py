"""Exception hierarchy. Every error carries a stable machine-readable code."""


class RootcatError(Exception):
    code = "error"

    def to_dict(self):
        return {"code": self.code, "message": str(self)}


class SpecError(RootcatError):
    code = "parse_error"


class UnsupportedRelation(SpecError):
    code = "unsupported_relation"


class InfiniteDimensional(SpecError):
    code = "infinite_dimensional"


class FieldError(RootcatError):
    code = "field_error"


class MismatchError(RootcatError):
    code = "mismatch"


class GlobalDimensionExceeded(RootcatError):
    code = "gldim_exceeded"


class EnumerationCapExceeded(RootcatError):
    code = "cap_exceeded"


class CatalogIncomplete(RootcatError):
    code = "catalog_incomplete"


class Unverifiable(RootcatError):
    code = "unverifiable"


class DegenerateField(FieldError):
    code = "degenerate_field"


class VerificationFailed(RootcatError):
    code = "verification_failed"
