"""
URL configuration for core project.

The project serves no pages; every entry point is a management command.
"""

urlpatterns: list = []
