# Domain Layer - Business Logic and Entities
