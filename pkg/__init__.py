# أدوات التحقق من نموذج بوتس الشيرالي - الوحدات في جذر المستودع وتُستورد مباشرة
