# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Utility functions."""

from .logging import CLI_LOGGER_NAME, get_logger

__all__ = ["CLI_LOGGER_NAME", "get_logger"]
