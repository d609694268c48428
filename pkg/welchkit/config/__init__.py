"""
Configuration module for welchkit.
"""

from .features import is_feature_enabled, set_feature, get_setting, FEATURE_FLAGS, SETTINGS

__all__ = ['is_feature_enabled', 'set_feature', 'get_setting', 'FEATURE_FLAGS', 'SETTINGS']
