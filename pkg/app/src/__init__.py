# Clean Architecture - Stable Basis Calculator
