from powerideals.middlewares.errors import (
    INPUT_ERROR_EXIT,
    VERIFICATION_FAILURE_EXIT,
    emit,
    handles_errors,
    wants_json,
)
