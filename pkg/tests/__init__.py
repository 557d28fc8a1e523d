"""Testes do projeto Gen Food."""
