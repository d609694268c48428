"""
Domain services: numerics, measures, frames, bounds, metrics and the optimizer.
"""
