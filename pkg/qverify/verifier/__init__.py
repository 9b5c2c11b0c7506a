# The catalog and the engine import the qlang evaluator, which reaches back into
# pk_param; import them as qverify.verifier.catalog / qverify.verifier.engine.
from .report import Mismatch, VerificationReport, compare_series  # noqa: F401
