# SPDX-License-Identifier: Apache-2.0.
# Copyright (c) 2024 - 2025 fracqos contributors.
"""Common utils for all models."""

from .base import FracQosBase

__all__ = ["FracQosBase"]
