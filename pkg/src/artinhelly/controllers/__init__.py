from .callback_manager import CallbackManager
from .verification_controller import ProgressEvent, Stage, VerificationController

__all__ = ["CallbackManager", "ProgressEvent", "Stage", "VerificationController"]
