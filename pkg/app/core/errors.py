from __future__ import annotations

from typing import Optional


class CrystalError(Exception):
    """모든 도메인 오류의 기반 클래스.

    ValueError 를 상속하지 않는다: pydantic validator 안에서 발생해도
    ValidationError 로 감싸지지 않고 그대로 전파된다.
    """

    code: str = "crystal_error"

    def __init__(self, message: str, *, detail: Optional[dict] = None) -> None:
        super().__init__(message)
        self.message = message
        self.detail = detail or {}

    def one_line(self) -> str:
        return f"error[{self.code}]: {self.message}"


# ========================================
# 그래프 정의 위반 (validate)
# ========================================
class FixedPointError(CrystalError):
    code = "FixedPoint"


class NotInvolutionError(CrystalError):
    code = "NotInvolution"


class DisconnectedError(CrystalError):
    code = "Disconnected"


class OddVertexCountError(CrystalError):
    code = "OddVertexCount"


class BadColorCountError(CrystalError):
    code = "BadColorCount"


# ========================================
# 연산 인자 오류
# ========================================
class ColorOutOfRangeError(CrystalError):
    code = "ColorOutOfRange"


class DimMismatchError(CrystalError):
    code = "DimMismatch"


class VertexOutOfRangeError(CrystalError):
    code = "VertexOutOfRange"


class NotAPermutationError(CrystalError):
    code = "NotAPermutation"


class UnsupportedDimensionError(CrystalError):
    code = "UnsupportedDimension"


# ========================================
# 위상/랭크 관련 전제 위반
# ========================================
class NotContractedError(CrystalError):
    code = "NotContracted"


class RankInconsistentError(CrystalError):
    code = "RankInconsistent"


class NotAManifoldCrystallizationError(CrystalError):
    code = "NotAManifoldCrystallization"


class BettiEulerMismatchError(CrystalError):
    code = "BettiEulerMismatch"


class RankTooSmallError(CrystalError):
    code = "RankTooSmall"


class UncertifiedError(CrystalError):
    code = "Uncertified"


# ========================================
# 입출력 / 설정
# ========================================
class ConfigInvalidError(CrystalError):
    code = "ConfigInvalid"


class CGFParseError(CrystalError):
    code = "CGFParse"


class CatalogError(CrystalError):
    code = "Catalog"
