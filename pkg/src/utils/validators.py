"""
Utility functions for command argument validation using marshmallow schemas.
"""
from argparse import Namespace
from functools import wraps


def validate_arguments(schema_class):
    """
    Decorator to validate parsed command-line arguments using a marshmallow schema.

    Argparse dests are loaded as the schema's fields; arguments left
    unset (None) fall back to the schema's load_default. A
    ValidationError propagates to handle_errors, which maps it to the
    usage exit code.

    Args:
        schema_class: The marshmallow schema class to use for validation

    Returns:
        Decorator function that passes the validated data to the handler
    """
    def decorator(func):
        @wraps(func)
        def wrapper(args: Namespace, *extra, **kwargs):
            schema = schema_class()
            payload = {
                name: value for name, value in vars(args).items()
                if name in schema.fields and value is not None
            }
            validated_data = schema.load(payload)
            return func(validated_data, *extra, **kwargs)
        return wrapper
    return decorator
