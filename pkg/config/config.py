"""
Configuration module for the CLC tally engine
Loads environment variables and provides validated config
"""
import os
import sys
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


class Config:
    """Configuration class for the tally engine and verification harness"""

    # Presentation
    DISPLAY_DIGITS = int(os.getenv('CLC_DISPLAY_DIGITS', 4))

    # Ballot handling: 'error' or 'tied-last'
    UNLISTED_POLICY = os.getenv('CLC_UNLISTED_POLICY', 'error').lower()

    # Size bounds for exhaustive procedures
    ENUMERATION_BOUND = int(os.getenv('CLC_ENUMERATION_BOUND', 7))
    ORACLE_BOUND = int(os.getenv('CLC_ORACLE_BOUND', 8))

    # Verification harness
    SEARCH_BUDGET = int(os.getenv('CLC_SEARCH_BUDGET', 10000))
    PROPERTY_TRIALS = int(os.getenv('CLC_PROPERTY_TRIALS', 200))
    DEFAULT_SEED = int(os.getenv('CLC_DEFAULT_SEED', 0))

    # Logging
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO').upper()
    LOG_FILE = os.getenv('LOG_FILE', 'logs/clc_tally.log')

    UNLISTED_POLICIES = ('error', 'tied-last')

    @classmethod
    def validate(cls):
        """Validate configuration values"""
        errors = []

        if cls.DISPLAY_DIGITS < 0:
            errors.append("CLC_DISPLAY_DIGITS must be >= 0")

        if cls.UNLISTED_POLICY not in cls.UNLISTED_POLICIES:
            errors.append("CLC_UNLISTED_POLICY must be 'error' or 'tied-last'")

        if cls.ENUMERATION_BOUND < 1:
            errors.append("CLC_ENUMERATION_BOUND must be >= 1")
        if cls.ORACLE_BOUND < 1:
            errors.append("CLC_ORACLE_BOUND must be >= 1")

        if cls.SEARCH_BUDGET < 0:
            errors.append("CLC_SEARCH_BUDGET must be >= 0")
        if cls.PROPERTY_TRIALS < 1:
            errors.append("CLC_PROPERTY_TRIALS must be >= 1")

        if cls.LOG_LEVEL not in ('DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'):
            errors.append("LOG_LEVEL must be a standard logging level name")

        if errors:
            raise ValueError(f"Configuration errors:\n" + "\n".join(f"- {e}" for e in errors))

        return True


# Validate on import
try:
    Config.validate()
except ValueError as e:
    print(f"⚠️  Configuration Error: {e}", file=sys.stderr)
    print("Please check your .env against .env.example", file=sys.stderr)
